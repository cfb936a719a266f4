#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vgroupoid/linalg.hpp"
#include "vgroupoid/report.hpp"

namespace vg {

/// Position of an element in a carrier's canonical enumeration.
using Index = std::uint32_t;

inline constexpr std::size_t kDefaultMaxCarrier = 10'000;

/// A finite vector space over Z_p with elements addressed by their position in
/// a fixed enumeration. Coordinate spaces and re-based spaces (shifted zero,
/// affine scalar action) both implement it, so the verifiers never assume
/// coordinatewise arithmetic.
class AbstractSpace {
 public:
  virtual ~AbstractSpace() = default;

  virtual const PrimeField& field() const = 0;
  virtual std::size_t size() const = 0;
  virtual Index zero() const = 0;
  virtual Index add(Index x, Index y) const = 0;
  virtual Index scale(Residue k, Index x) const = 0;
  virtual std::string label(Index x) const = 0;

  Index neg(Index x) const { return scale(field().modulus() - 1, x); }
  Index sub(Index x, Index y) const { return add(x, neg(y)); }
  /// a·x + b·y
  Index combine(Residue a, Index x, Residue b, Index y) const { return add(scale(a, x), scale(b, y)); }
};

/// Enumeration order of a space: 0, 1, ..., size()-1.
std::vector<Index> enumerate(const AbstractSpace& s);

/// Nesting used to print coordinates: a leaf of `dim` coordinates, or a tuple
/// of parts. A one-coordinate leaf prints as a bare residue.
struct Layout {
  int dim = 1;
  std::vector<Layout> parts;

  static Layout leaf(int dim) { return Layout{dim, {}}; }
  static Layout tuple(std::vector<Layout> parts);

  bool is_leaf() const noexcept { return parts.empty(); }
  int total_dim() const;
  std::string render(const Residue* coords) const;

  friend bool operator==(const Layout&, const Layout&) = default;
};

/// A subspace of Z_p^n (possibly all of it) enumerated lexicographically.
class CoordinateSpace final : public AbstractSpace {
 public:
  /// Throws SizeGuard when the subspace has more than `max_carrier` elements.
  static std::shared_ptr<const CoordinateSpace> make(Subspace subspace, Layout layout,
                                                     std::size_t max_carrier = kDefaultMaxCarrier);
  static std::shared_ptr<const CoordinateSpace> full(PrimeField field, int dim,
                                                     std::size_t max_carrier = kDefaultMaxCarrier);

  const PrimeField& field() const override { return subspace_.field(); }
  std::size_t size() const override { return size_; }
  Index zero() const override { return 0; }
  Index add(Index x, Index y) const override;
  Index scale(Residue k, Index x) const override;
  std::string label(Index x) const override;

  const Subspace& subspace() const noexcept { return subspace_; }
  const Layout& layout() const noexcept { return layout_; }
  int ambient_dim() const noexcept { return static_cast<int>(subspace_.ambient_dim()); }

  Coords coords(Index x) const;
  /// Position of `v`, or nullopt when `v` is not in the subspace.
  std::optional<Index> find(const Coords& v) const;
  /// Throws UnknownElement when `v` is not in the subspace.
  Index index_of(const Coords& v) const;

 private:
  CoordinateSpace(Subspace subspace, Layout layout);
  Index index_of_member(const Residue* v) const;

  Subspace subspace_;
  Layout layout_;
  std::size_t size_ = 0;
  std::vector<Residue> coords_;    // row-major size_ x ambient_dim
  std::vector<Index> add_table_;   // filled when size_ is small
  std::vector<Index> scale_table_;
};

/// A space whose elements are a subset of a parent space, with its own
/// operations expressed on parent positions.
class DerivedSpace final : public AbstractSpace {
 public:
  using AddOp = std::function<Index(Index, Index)>;
  using ScaleOp = std::function<Index(Residue, Index)>;

  /// The subset with inherited operations. Throws NotASubspace unless the
  /// subset contains zero and is closed.
  static std::shared_ptr<const DerivedSpace> inherited(std::shared_ptr<const AbstractSpace> parent,
                                                       std::vector<Index> members);
  /// The subset re-based at `origin`: x ⊞ y = x + y - origin and
  /// k ⊠ x = k·x + (1-k)·origin. Throws NotASubspace if not closed.
  static std::shared_ptr<const DerivedSpace> shifted(std::shared_ptr<const AbstractSpace> parent,
                                                     std::vector<Index> members, Index origin);

  const PrimeField& field() const override { return parent_->field(); }
  std::size_t size() const override { return members_.size(); }
  Index zero() const override { return zero_; }
  Index add(Index x, Index y) const override;
  Index scale(Residue k, Index x) const override;
  std::string label(Index x) const override { return parent_->label(members_[x]); }

  const AbstractSpace& parent() const noexcept { return *parent_; }
  const std::vector<Index>& members() const noexcept { return members_; }
  Index parent_index(Index local) const { return members_[local]; }
  std::optional<Index> local_index(Index parent) const;

 private:
  DerivedSpace(std::shared_ptr<const AbstractSpace> parent, std::vector<Index> members, AddOp add,
               ScaleOp scale, Index parent_zero);

  std::shared_ptr<const AbstractSpace> parent_;
  std::vector<Index> members_;
  std::vector<std::int64_t> local_;  // parent position -> local position or -1
  AddOp add_;
  ScaleOp scale_;
  Index zero_ = 0;
};

/// Exhaustive vector-space axiom sweep: additive group laws, distributivity,
/// compatibility of scalar multiplication, 1·x = x.
AxiomReport check_space_axioms(const AbstractSpace& s, std::size_t witness_cap = kDefaultWitnessCap);

/// Checks m(a·x + b·y) = a·m(x) + b·m(y) over all scalars and elements.
/// Throws DomainMismatch when the table does not fit dom/cod.
AxiomReport check_linear(std::span<const Index> table, const AbstractSpace& dom, const AbstractSpace& cod,
                         std::size_t witness_cap = kDefaultWitnessCap);

/// Adds law `law_id` to `report`: the subset contains zero and is closed under
/// addition and scalar multiplication.
void check_subset_closed(const AbstractSpace& s, std::span<const Index> members, std::string_view law_id,
                         AxiomReport& report);

}  // namespace vg
