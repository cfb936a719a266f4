#include "vgroupoid/field.hpp"

#include <string>

namespace vg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_prime: return "NotPrime";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::domain_mismatch: return "DomainMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::partial_map: return "PartialMap";
    case Errc::mul_domain_mismatch: return "MulDomainMismatch";
    case Errc::unknown_element: return "UnknownElement";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::carrier_mismatch: return "CarrierMismatch";
    case Errc::unit_set_mismatch: return "UnitSetMismatch";
    case Errc::not_inverse: return "NotInverse";
    case Errc::not_a_subspace: return "NotASubspace";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::base_mismatch: return "BaseMismatch";
    case Errc::size_guard: return "SizeGuard";
    case Errc::image_outside_pullback: return "ImageOutsidePullback";
    case Errc::unit_map_conflict: return "UnitMapConflict";
    case Errc::not_coordinate_backed: return "NotCoordinateBacked";
  }
  return "Unknown";
}

bool is_prime(Residue n) noexcept {
  if (n < 2) return false;
  for (Residue d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Residue p) : p_(p) {
  if (!is_prime(p)) {
    throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  }
}

Residue PrimeField::inv(Residue a) const {
  a = reduce(a);
  if (a == 0) throw Error(Errc::division_by_zero, "inverse of 0 in Z_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  Residue r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const Residue q = r0 / r1;
    Residue t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

PrimeField make_field(Residue p) { return PrimeField(p); }

Residue field_inv(const PrimeField& f, Residue a) { return f.inv(a); }

}  // namespace vg
