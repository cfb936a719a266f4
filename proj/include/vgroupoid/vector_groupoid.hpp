#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "vgroupoid/groupoid.hpp"
#include "vgroupoid/space.hpp"

namespace vg {

struct Pairing;

/// A groupoid whose carrier is a finite vector space, with the unit set as a
/// subspace. Holding the structure does not assert the compatibility laws;
/// verify_vector_axioms does.
class VectorGroupoid {
 public:
  VectorGroupoid(std::shared_ptr<const AbstractSpace> space, std::shared_ptr<const FiniteGroupoid> groupoid,
                 std::shared_ptr<const Pairing> pairing = nullptr);

  const AbstractSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const AbstractSpace>& space_ptr() const noexcept { return space_; }
  const FiniteGroupoid& groupoid() const noexcept { return *groupoid_; }
  const std::shared_ptr<const FiniteGroupoid>& groupoid_ptr() const noexcept { return groupoid_; }
  const PrimeField& field() const { return space_->field(); }
  std::size_t size() const noexcept { return groupoid_->size(); }

  /// The unit set V₀, as carrier positions.
  const std::vector<Index>& base() const noexcept { return groupoid_->units(); }

  /// The coordinate space behind the carrier, or null for re-based spaces.
  std::shared_ptr<const CoordinateSpace> coordinate_space() const;

  /// Component bookkeeping for direct products and Whitney sums, else null.
  const Pairing* pairing() const noexcept { return pairing_.get(); }

 private:
  std::shared_ptr<const AbstractSpace> space_;
  std::shared_ptr<const FiniteGroupoid> groupoid_;
  std::shared_ptr<const Pairing> pairing_;
};

/// Carrier of a direct product or Whitney sum as pairs of operand elements.
struct Pairing {
  enum class Kind { direct_product, whitney_sum };
  Kind kind;
  VectorGroupoid first;
  VectorGroupoid second;
  std::vector<std::pair<Index, Index>> components;  // carrier position -> (first, second)
};

/// Throws CarrierMismatch if the groupoid and space enumerate different
/// elements, UnitSetMismatch if `base` is not the unit set.
VectorGroupoid attach_vector_structure(std::shared_ptr<const FiniteGroupoid> g,
                                       std::shared_ptr<const AbstractSpace> space, std::span<const Index> base);
VectorGroupoid attach_vector_structure(std::shared_ptr<const FiniteGroupoid> g,
                                       std::shared_ptr<const CoordinateSpace> space, const Subspace& base);

/// The vector groupoid laws: carrier is a vector space, base a subspace,
/// source/target/inversion linear, x + x⁻¹ = α(x) + β(x), and the four
/// compatibility laws of ⊙ with + and scaling (for every scalar k, including
/// 0 and 1).
AxiomReport verify_vector_axioms(const VectorGroupoid& v, std::size_t witness_cap = kDefaultWitnessCap);

/// Consequences of the laws: source/target are epimorphisms onto the base,
/// inversion is a linear automorphism, the 0-fibres and V(0) are subspaces,
/// 0 acts as a two-sided unit on its fibres, and x ↦ x - α(x), x ↦ x - β(x)
/// are injective on the 0-fibres.
AxiomReport verify_structural_consequences(const VectorGroupoid& v, std::size_t witness_cap = kDefaultWitnessCap);

/// x ↦ β(x) - x from α⁻¹(0) to β⁻¹(0), or x ↦ α(x) - x back.
struct FibreTranslation {
  enum class Direction { alpha_to_beta, beta_to_alpha };
  Direction direction;
  std::shared_ptr<const DerivedSpace> domain;
  std::shared_ptr<const DerivedSpace> codomain;
  std::vector<Index> table;  // local domain position -> local codomain position

  Index apply(Index local) const { return table[local]; }
};

struct FibreTranslations {
  FibreTranslation t_beta;
  FibreTranslation t_alpha;
  AxiomReport report;
};

/// Builds t_β and t_α on fibres computed from the α, β tables and checks
/// that each lands in the opposite fibre, is linear and bijective, and that
/// the two are mutually inverse.
FibreTranslations fibre_translations(const VectorGroupoid& v, std::size_t witness_cap = kDefaultWitnessCap);

/// V(u) with x ⊞ y = x + y - u, k ⊠ x = kx + (1-k)u and
/// x ⊡ y = (x - u) ⊙ (y - u) + u: a vector groupoid with the single unit u.
/// Throws NotAUnit.
VectorGroupoid isotropy_vector_groupoid(const VectorGroupoid& v, Index u);

}  // namespace vg
