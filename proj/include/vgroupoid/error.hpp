#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vg {

enum class Errc {
  not_prime,
  division_by_zero,
  domain_mismatch,
  dimension_mismatch,
  partial_map,
  mul_domain_mismatch,
  unknown_element,
  not_a_unit,
  carrier_mismatch,
  unit_set_mismatch,
  not_inverse,
  not_a_subspace,
  field_mismatch,
  base_mismatch,
  size_guard,
  image_outside_pullback,
  unit_map_conflict,
  not_coordinate_backed,
};

/// Stable CamelCase name of an error code ("NotPrime", "SizeGuard", ...).
std::string_view errc_name(Errc code) noexcept;

/// The single exception type thrown by the library. The code is part of the
/// contract; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vg
