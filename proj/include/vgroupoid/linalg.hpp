#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vgroupoid/field.hpp"

namespace vg {

using Coords = Eigen::Matrix<Residue, Eigen::Dynamic, 1>;
using CoordMatrix = Eigen::Matrix<Residue, Eigen::Dynamic, Eigen::Dynamic>;

/// Coefficient-wise reduction of any residue expression into [0, p).
template <typename Derived>
auto reduced(const PrimeField& f, const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([f](Residue a) { return f.reduce(a); });
}

/// Lexicographic comparison of two coordinate vectors of equal length.
bool lex_less(const Coords& a, const Coords& b);

/// A coordinate vector in Z_p^d.
class FVector {
 public:
  FVector(PrimeField field, Coords coords);
  FVector(PrimeField field, std::initializer_list<Residue> coords);

  static FVector zero(PrimeField field, Eigen::Index dim);

  const PrimeField& field() const noexcept { return field_; }
  const Coords& coords() const noexcept { return coords_; }
  Eigen::Index size() const noexcept { return coords_.size(); }
  Residue operator[](Eigen::Index i) const { return coords_(i); }

  friend FVector operator+(const FVector& a, const FVector& b);
  friend FVector operator-(const FVector& a, const FVector& b);
  friend FVector operator-(const FVector& a);
  friend FVector operator*(Residue k, const FVector& v);

  friend bool operator==(const FVector& a, const FVector& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }
  friend bool operator<(const FVector& a, const FVector& b) { return lex_less(a.coords_, b.coords_); }

 private:
  PrimeField field_;
  Coords coords_;
};

/// A linear map Z_p^cols -> Z_p^rows given by its matrix.
class FLinearMap {
 public:
  FLinearMap(PrimeField field, CoordMatrix matrix);

  static FLinearMap identity(PrimeField field, Eigen::Index dim);
  static FLinearMap zero(PrimeField field, Eigen::Index rows, Eigen::Index cols);

  const PrimeField& field() const noexcept { return field_; }
  const CoordMatrix& matrix() const noexcept { return matrix_; }
  Eigen::Index rows() const noexcept { return matrix_.rows(); }
  Eigen::Index cols() const noexcept { return matrix_.cols(); }

  Coords apply(const Coords& x) const;
  FVector apply(const FVector& x) const;

  /// (this ∘ inner)(x) = this(inner(x)).
  FLinearMap after(const FLinearMap& inner) const;

 private:
  PrimeField field_;
  CoordMatrix matrix_;
};

/// Row-reduces `m` over the field; returns the nonzero rows in reduced row
/// echelon form.
CoordMatrix rref(const PrimeField& f, CoordMatrix m);

/// A subspace of Z_p^n, stored by its reduced row echelon basis so that equal
/// subspaces compare equal structurally.
class Subspace {
 public:
  static Subspace span(PrimeField field, Eigen::Index ambient_dim, const CoordMatrix& generators);
  static Subspace span(PrimeField field, Eigen::Index ambient_dim, std::span<const FVector> generators);
  static Subspace full(PrimeField field, Eigen::Index ambient_dim);
  static Subspace zero(PrimeField field, Eigen::Index ambient_dim);

  const PrimeField& field() const noexcept { return field_; }
  Eigen::Index ambient_dim() const noexcept { return ambient_dim_; }
  Eigen::Index rank() const noexcept { return basis_.rows(); }
  const CoordMatrix& basis() const noexcept { return basis_; }
  const std::vector<Eigen::Index>& pivots() const noexcept { return pivots_; }

  /// Number of elements p^rank, or nullopt if that exceeds 2^62.
  std::optional<std::uint64_t> cardinality() const;

  bool contains(const Coords& v) const;
  /// Throws DimensionMismatch when the ambient dimensions differ.
  bool contains(const FVector& v) const;
  bool contains(const Subspace& other) const;

  /// The element whose pivot coordinates are `coefficients`.
  Coords combination(std::span<const Residue> coefficients) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(PrimeField field, Eigen::Index ambient_dim, CoordMatrix basis);

  PrimeField field_;
  Eigen::Index ambient_dim_;
  CoordMatrix basis_;
  std::vector<Eigen::Index> pivots_;
};

bool subspace_membership(const Subspace& s, const FVector& v);

/// All elements of the subspace in lexicographic coordinate order.
std::vector<FVector> enumerate(const Subspace& s);

}  // namespace vg
