#pragma once

#include <cstdint>

#include "vgroupoid/error.hpp"

namespace vg {

/// A residue class representative. Always stored fully reduced in [0, p).
using Residue = std::int64_t;

/// The prime field Z_p. Immutable value type; cheap to copy.
class PrimeField {
 public:
  /// Throws Error(NotPrime) unless p is a prime >= 2.
  explicit PrimeField(Residue p);

  Residue modulus() const noexcept { return p_; }

  Residue reduce(Residue a) const noexcept {
    Residue r = a % p_;
    return r < 0 ? r + p_ : r;
  }
  Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
  Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
  Residue neg(Residue a) const noexcept { return reduce(-a); }
  Residue mul(Residue a, Residue b) const noexcept { return reduce(a * b); }

  /// Multiplicative inverse; throws Error(DivisionByZero) for a = 0.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

bool is_prime(Residue n) noexcept;

PrimeField make_field(Residue p);

Residue field_inv(const PrimeField& f, Residue a);

}  // namespace vg
