#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vgroupoid/vector_groupoid.hpp"

namespace vg {

inline constexpr int kMaxSymmetryDegree = 6;

/// (V, +) over the single unit 0: α = β = 0, ι = -id, x ⊙ y = x + y.
VectorGroupoid single_unit(std::shared_ptr<const CoordinateSpace> space);

/// α = β = ι = id, base V, x ⊙ x = x the only products.
VectorGroupoid null_vg(std::shared_ptr<const CoordinateSpace> space);

/// V × V with (x,y)(y,z) = (x,z), α(x,y) = (x,x), β(x,y) = (y,y), ι(x,y) = (y,x).
VectorGroupoid pair_vg(std::shared_ptr<const CoordinateSpace> space, std::size_t max_carrier = kDefaultMaxCarrier);

/// V × V with α(x,y) = (x,px), β(x,y) = (qy,y), ι(x,y) = (qy,px) and
/// (x,y)(qy,z) = (x,z). Throws NotInverse unless pq = 1.
VectorGroupoid vpq(std::shared_ptr<const CoordinateSpace> space, Residue p, Residue q,
                   std::size_t max_carrier = kDefaultMaxCarrier);

/// V³ with α(x) = (x1,x1,0), β(x) = (x2,x2,0), ι(x) = (x2,x1,-x3) and
/// (x1,x2,x3)(x2,y2,y3) = (x1,y2,x3+y3).
VectorGroupoid v3(std::shared_ptr<const CoordinateSpace> space, std::size_t max_carrier = kDefaultMaxCarrier);

/// W × V × W with α = (w1,0,w1), β = (w2,0,w2), ι = (w2,-v,w1) and
/// (w1,v1,w2)(w2,v2,w3) = (w1,v1+v2,w3). Throws NotASubspace unless W ⊆ V.
VectorGroupoid trivial_tvg(std::shared_ptr<const CoordinateSpace> space, const Subspace& w,
                           std::size_t max_carrier = kDefaultMaxCarrier);

/// Componentwise structure on V × W. Throws FieldMismatch, NotCoordinateBacked.
VectorGroupoid direct_product(const VectorGroupoid& v, const VectorGroupoid& w,
                              std::size_t max_carrier = kDefaultMaxCarrier);

/// The pullback {(v,v') : α(v) = α'(v'), β(v) = β'(v')} with componentwise
/// structure. Throws BaseMismatch unless both bases are the same subspace.
VectorGroupoid whitney_sum(const VectorGroupoid& v, const VectorGroupoid& w,
                           std::size_t max_carrier = kDefaultMaxCarrier);

/// A bijection of a nonempty subset of {x1..xn} onto itself. `domain` is
/// sorted; `image[i]` is the image of `domain[i]`. Points are 0-based.
struct PartialBijection {
  int n = 0;
  std::vector<int> domain;
  std::vector<int> image;

  std::string label() const;  // "[x1->x2,x2->x1]"
  int sign() const;           // parity of the permutation of the domain
  PartialBijection inverse() const;
  /// (f ∘ g)(x) = f(g(x)); both must share the domain.
  PartialBijection after(const PartialBijection& g) const;

  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;
};

/// All partial bijections of an n-set, ordered by domain bitmask, then by
/// image lexicographically.
std::vector<PartialBijection> partial_bijections(int n);

/// SG_n: composable iff domains agree, f·g = f ∘ g, α = β = Id_D(f).
/// Throws SizeGuard outside 1..6.
FiniteGroupoid symmetry_groupoid(int n);

/// (Σ k!·C(n,k), 2ⁿ - 1) for n ≥ 1.
std::pair<std::uint64_t, std::uint64_t> sg_cardinality(int n);

/// {+1, -1} under multiplication, as a groupoid over {+1}.
FiniteGroupoid sign_group();

/// Tagged construction request, validated before building.
struct ConstructionSpec {
  enum class Kind { single_unit, null, pair, vpq, v3, tvg, direct_product, whitney, symmetry, sign };
  Kind kind = Kind::pair;
  std::shared_ptr<const CoordinateSpace> space;
  std::optional<Subspace> subspace;
  Residue p = 1;
  Residue q = 1;
  int degree = 0;
  std::shared_ptr<const VectorGroupoid> left;
  std::shared_ptr<const VectorGroupoid> right;
  std::size_t max_carrier = kDefaultMaxCarrier;

  /// Throws the same errors the construction would, without building.
  void validate() const;
};

struct Construction {
  std::shared_ptr<const FiniteGroupoid> groupoid;
  std::shared_ptr<const VectorGroupoid> vector;  // null for symmetry and sign
};

Construction build(const ConstructionSpec& spec);

struct CatalogEntry {
  std::string name;
  std::string signature;
  std::string summary;
};

const std::vector<CatalogEntry>& catalog();

}  // namespace vg
