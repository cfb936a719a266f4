#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgroupoid/report.hpp"
#include "vgroupoid/space.hpp"

namespace vg {

/// Raw structure maps of a finite groupoid over an indexed carrier.
struct GroupoidTables {
  std::vector<std::string> labels;
  std::vector<Index> source;
  std::vector<Index> target;
  std::vector<Index> inverse;
  std::vector<Index> units;
  /// Must return a value exactly on the pairs with target(x) == source(y).
  std::function<std::optional<Index>(Index, Index)> multiply;
};

/// A finite groupoid (G, α, β, m, ι, G₀). Immutable once built; the partial
/// multiplication is tabulated over the composable pairs at build time.
class FiniteGroupoid {
 public:
  std::size_t size() const noexcept { return labels_.size(); }

  Index source(Index x) const { return source_[x]; }
  Index target(Index x) const { return target_[x]; }
  Index inverse(Index x) const { return inverse_[x]; }

  bool composable(Index x, Index y) const { return target_[x] == source_[y]; }
  /// x·y, or nullopt when target(x) != source(y).
  std::optional<Index> multiply(Index x, Index y) const;

  const std::vector<Index>& units() const noexcept { return units_; }
  bool is_unit(Index x) const { return unit_mask_[x] != 0; }

  const std::string& label(Index x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Index> find(std::string_view label) const;

  /// {x : source(x) = e} and {x : target(x) = e}, for any element e.
  const std::vector<Index>& alpha_fibre(Index e) const { return alpha_fibres_[e]; }
  const std::vector<Index>& beta_fibre(Index e) const { return beta_fibres_[e]; }

  /// Copy of the structure maps, with multiply backed by the stored table.
  GroupoidTables tables() const;

 private:
  friend FiniteGroupoid build_groupoid(GroupoidTables tables);
  FiniteGroupoid() = default;

  std::vector<std::string> labels_;
  std::vector<Index> source_, target_, inverse_, units_;
  std::vector<char> unit_mask_;
  std::vector<std::vector<Index>> alpha_fibres_, beta_fibres_;
  std::vector<Index> fibre_pos_;           // position of y inside alpha_fibre(source(y))
  std::vector<std::size_t> row_offset_;    // start of x's row in products_
  std::vector<Index> products_;
};

/// Stores the structure verbatim; no groupoid law is assumed.
/// Throws PartialMap when a map is not total on the carrier and
/// MulDomainMismatch when multiply disagrees with composability.
FiniteGroupoid build_groupoid(GroupoidTables tables);

/// Throws UnknownElement for positions outside the carrier.
bool composable(const FiniteGroupoid& g, Index x, Index y);

/// Groupoid axioms: associativity with matching definedness, units, inverses,
/// and that source and target map onto the unit set.
AxiomReport verify_brandt(const FiniteGroupoid& g, std::size_t witness_cap = kDefaultWitnessCap);

/// The derived calculation rules (units fixed, anchors of products and
/// inverses, cancellation, involutive inversion, inverse of a product,
/// division) and the inversion/anchor identities. These follow from the
/// axioms, so a failure means the tables are inconsistent.
AxiomReport verify_calculus(const FiniteGroupoid& g, std::size_t witness_cap = kDefaultWitnessCap);

/// G(u) = {x : source(x) = target(x) = u} with the induced multiplication.
struct IsotropyGroup {
  Index unit = 0;
  std::vector<Index> elements;  // groupoid positions, ascending
  std::vector<Index> table;     // local x local -> local
  std::vector<Index> inverse;   // local -> local
  Index identity = 0;           // local position of the unit
  AxiomReport axioms;           // closure, associativity, identity, inverses

  std::size_t order() const noexcept { return elements.size(); }
  std::optional<Index> local(Index element) const;
  Index multiply(Index a, Index b) const { return table[a * elements.size() + b]; }
};

/// Throws NotAUnit if u is not a unit.
IsotropyGroup isotropy_group(const FiniteGroupoid& g, Index u, std::size_t witness_cap = kDefaultWitnessCap);

struct GroupIsomorphism {
  IsotropyGroup domain;
  IsotropyGroup codomain;
  std::vector<Index> map;  // local -> local
  AxiomReport report;      // lands in codomain, bijective, multiplicative
};

/// z ↦ x⁻¹·z·x from G(source(x)) to G(target(x)).
GroupIsomorphism conjugation_iso(const FiniteGroupoid& g, Index x, std::size_t witness_cap = kDefaultWitnessCap);

/// True iff every ordered pair of units is joined by some element.
bool is_transitive(const FiniteGroupoid& g);

/// Laws "anchor-onto" (transitivity) and "isotropy-isomorphic" (for every
/// pair of units, conjugation by a connecting element is a group isomorphism).
AxiomReport transitivity_report(const FiniteGroupoid& g, std::size_t witness_cap = kDefaultWitnessCap);

/// source(x) = target(x) for every x.
bool is_group_bundle(const FiniteGroupoid& g);

/// Restriction of g to {x : source(x) = target(x)}.
FiniteGroupoid isotropy_bundle(const FiniteGroupoid& g);

}  // namespace vg
