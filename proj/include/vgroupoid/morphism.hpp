#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "vgroupoid/vector_groupoid.hpp"

namespace vg {

/// An element map f between two groupoids. The unit map f₀ is always the
/// restriction of f to the units.
struct GroupoidMorphism {
  std::shared_ptr<const FiniteGroupoid> source;
  std::shared_ptr<const FiniteGroupoid> target;
  std::vector<Index> map;
  /// Pairs examined first by verify_homomorphism, so known counterexamples
  /// are reported regardless of the witness cap.
  std::vector<std::pair<Index, Index>> probe_pairs;

  Index operator()(Index x) const { return map[x]; }
  /// f₀ as (unit, image) pairs in unit order.
  std::vector<std::pair<Index, Index>> unit_map() const;
};

/// Throws DomainMismatch unless `map` is total into the target, and
/// UnitMapConflict if a supplied f₀ disagrees with f on some unit.
GroupoidMorphism make_morphism(std::shared_ptr<const FiniteGroupoid> source,
                               std::shared_ptr<const FiniteGroupoid> target, std::vector<Index> map,
                               const std::optional<std::vector<std::pair<Index, Index>>>& unit_map = std::nullopt);

/// outer ∘ inner. Throws DomainMismatch if they do not chain.
GroupoidMorphism compose(const GroupoidMorphism& outer, const GroupoidMorphism& inner);

/// Composable pairs go to composable pairs and products to products; units to
/// units, inverses to inverses, and α'∘f = f₀∘α, β'∘f = f₀∘β.
AxiomReport verify_morphism(const GroupoidMorphism& m, std::size_t witness_cap = kDefaultWitnessCap);

/// Law "composability-reflected": (f(x), f(y)) composable implies (x, y)
/// composable, over all pairs.
AxiomReport verify_homomorphism(const GroupoidMorphism& m, std::size_t witness_cap = kDefaultWitnessCap);

/// True iff (x, y) shows that m does not reflect composability.
bool reflects_failure(const GroupoidMorphism& m, Index x, Index y);

/// verify_morphism plus linearity of f between the two carrier spaces.
/// Throws CarrierMismatch if the morphism's groupoids are not those of
/// src and dst.
AxiomReport verify_vector_morphism(const GroupoidMorphism& m, const VectorGroupoid& src, const VectorGroupoid& dst,
                                   std::size_t witness_cap = kDefaultWitnessCap);

struct AnchorMorphism {
  VectorGroupoid target;  // pair groupoid over the base
  GroupoidMorphism morphism;
};

/// x ↦ (α(x), β(x)) into the pair groupoid over the base.
/// Throws NotCoordinateBacked for re-based carriers.
AnchorMorphism anchor_morphism(const VectorGroupoid& v);

/// The signature map from SG_n to {+1, -1}. For n = 4 the probe pair is the
/// 3-cycle on {x1,x2,x3} and the transposition of x1, x4 fixing x3.
GroupoidMorphism sgn_sharp(int n);

/// Canonical projection of a direct product or Whitney sum onto its first
/// (which = 1) or second (which = 2) component. Throws DomainMismatch when
/// `v` carries no pairing.
GroupoidMorphism projection(const VectorGroupoid& v, int which);

struct UniversalMap {
  GroupoidMorphism phi;
  /// first-projection-commutes, second-projection-commutes, pointwise-unique,
  /// perturbation-detected, and the vector-morphism laws of φ.
  AxiomReport report;
};

/// φ(x) = (q(x), q'(x)) into the Whitney sum `sum` of q's and q''s targets.
/// Throws ImageOutsidePullback if some pair is not in the carrier,
/// CarrierMismatch if the targets are not the summands.
UniversalMap whitney_universal(const VectorGroupoid& u, const GroupoidMorphism& q, const GroupoidMorphism& q2,
                               const VectorGroupoid& sum, std::size_t witness_cap = kDefaultWitnessCap);

}  // namespace vg
