#include "vgroupoid/linalg.hpp"

#include <string>

namespace vg {
namespace {

void require_compatible(const FVector& a, const FVector& b) {
  if (!(a.field() == b.field())) throw Error(Errc::field_mismatch, "vectors over different fields");
  if (a.size() != b.size()) {
    throw Error(Errc::dimension_mismatch, "vector lengths " + std::to_string(a.size()) + " and " +
                                              std::to_string(b.size()) + " differ");
  }
}

}  // namespace

bool lex_less(const Coords& a, const Coords& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

FVector::FVector(PrimeField field, Coords coords) : field_(field), coords_(reduced(field, coords)) {}

FVector::FVector(PrimeField field, std::initializer_list<Residue> coords)
    : field_(field), coords_(static_cast<Eigen::Index>(coords.size())) {
  Eigen::Index i = 0;
  for (Residue c : coords) coords_(i++) = field.reduce(c);
}

FVector FVector::zero(PrimeField field, Eigen::Index dim) { return FVector(field, Coords::Zero(dim)); }

FVector operator+(const FVector& a, const FVector& b) {
  require_compatible(a, b);
  return FVector(a.field_, a.coords_ + b.coords_);
}

FVector operator-(const FVector& a, const FVector& b) {
  require_compatible(a, b);
  return FVector(a.field_, a.coords_ - b.coords_);
}

FVector operator-(const FVector& a) { return FVector(a.field_, -a.coords_); }

FVector operator*(Residue k, const FVector& v) { return FVector(v.field_, v.field_.reduce(k) * v.coords_); }

FLinearMap::FLinearMap(PrimeField field, CoordMatrix matrix)
    : field_(field), matrix_(reduced(field, matrix)) {}

FLinearMap FLinearMap::identity(PrimeField field, Eigen::Index dim) {
  return FLinearMap(field, CoordMatrix::Identity(dim, dim));
}

FLinearMap FLinearMap::zero(PrimeField field, Eigen::Index rows, Eigen::Index cols) {
  return FLinearMap(field, CoordMatrix::Zero(rows, cols));
}

Coords FLinearMap::apply(const Coords& x) const {
  if (x.size() != cols()) throw Error(Errc::dimension_mismatch, "linear map applied to wrong length");
  return reduced(field_, matrix_ * x);
}

FVector FLinearMap::apply(const FVector& x) const {
  if (!(x.field() == field_)) throw Error(Errc::field_mismatch, "linear map applied over wrong field");
  return FVector(field_, apply(x.coords()));
}

FLinearMap FLinearMap::after(const FLinearMap& inner) const {
  if (inner.rows() != cols()) throw Error(Errc::dimension_mismatch, "composed maps do not chain");
  return FLinearMap(field_, matrix_ * inner.matrix_);
}

CoordMatrix rref(const PrimeField& f, CoordMatrix m) {
  m = reduced(f, m);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    const Residue scale = f.inv(m(row, col));
    m.row(row) = reduced(f, m.row(row) * scale);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Residue factor = m(r, col);
      m.row(r) = reduced(f, m.row(r) - factor * m.row(row));
    }
    ++row;
  }
  return m.topRows(row);
}

Subspace::Subspace(PrimeField field, Eigen::Index ambient_dim, CoordMatrix basis)
    : field_(field), ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (Eigen::Index r = 0; r < basis_.rows(); ++r) {
    Eigen::Index c = 0;
    while (basis_(r, c) == 0) ++c;
    pivots_.push_back(c);
  }
}

Subspace Subspace::span(PrimeField field, Eigen::Index ambient_dim, const CoordMatrix& generators) {
  if (generators.rows() > 0 && generators.cols() != ambient_dim) {
    throw Error(Errc::dimension_mismatch, "generator length differs from ambient dimension");
  }
  if (generators.rows() == 0) return zero(field, ambient_dim);
  return Subspace(field, ambient_dim, rref(field, generators));
}

Subspace Subspace::span(PrimeField field, Eigen::Index ambient_dim, std::span<const FVector> generators) {
  CoordMatrix m(static_cast<Eigen::Index>(generators.size()), ambient_dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const FVector& g = generators[i];
    if (g.size() != ambient_dim) throw Error(Errc::dimension_mismatch, "generator length differs from ambient dimension");
    if (!(g.field() == field)) throw Error(Errc::field_mismatch, "generator over a different field");
    m.row(static_cast<Eigen::Index>(i)) = g.coords().transpose();
  }
  return span(field, ambient_dim, m);
}

Subspace Subspace::full(PrimeField field, Eigen::Index ambient_dim) {
  return Subspace(field, ambient_dim, CoordMatrix::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::zero(PrimeField field, Eigen::Index ambient_dim) {
  return Subspace(field, ambient_dim, CoordMatrix(0, ambient_dim));
}

std::optional<std::uint64_t> Subspace::cardinality() const {
  std::uint64_t n = 1;
  const auto p = static_cast<std::uint64_t>(field_.modulus());
  for (Eigen::Index i = 0; i < rank(); ++i) {
    if (n > (std::uint64_t{1} << 62) / p) return std::nullopt;
    n *= p;
  }
  return n;
}

Coords Subspace::combination(std::span<const Residue> coefficients) const {
  Coords v = Coords::Zero(ambient_dim_);
  for (Eigen::Index r = 0; r < rank(); ++r) {
    const Residue c = coefficients[static_cast<std::size_t>(r)];
    if (c != 0) v += c * basis_.row(r).transpose();
  }
  return reduced(field_, v);
}

bool Subspace::contains(const Coords& v) const {
  if (v.size() != ambient_dim_) return false;
  // In RREF the only candidate combination uses the pivot coordinates of v.
  Coords rest = reduced(field_, v);
  for (Eigen::Index r = 0; r < rank(); ++r) {
    const Residue c = rest(pivots_[static_cast<std::size_t>(r)]);
    if (c != 0) rest = reduced(field_, rest - c * basis_.row(r).transpose());
  }
  return rest.isZero();
}

bool Subspace::contains(const FVector& v) const {
  if (v.size() != ambient_dim_) {
    throw Error(Errc::dimension_mismatch, "vector of length " + std::to_string(v.size()) +
                                              " tested against ambient dimension " + std::to_string(ambient_dim_));
  }
  if (!(v.field() == field_)) throw Error(Errc::field_mismatch, "vector over a different field");
  return contains(v.coords());
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(Errc::dimension_mismatch, "subspaces of different ambient spaces");
  for (Eigen::Index r = 0; r < other.rank(); ++r) {
    if (!contains(Coords(other.basis_.row(r).transpose()))) return false;
  }
  return true;
}

bool subspace_membership(const Subspace& s, const FVector& v) { return s.contains(v); }

std::vector<FVector> enumerate(const Subspace& s) {
  const auto count = s.cardinality();
  if (!count) throw Error(Errc::size_guard, "subspace too large to enumerate");
  std::vector<FVector> out;
  out.reserve(*count);
  // Coefficient tuples in lexicographic order give vectors in lexicographic
  // order because each coefficient appears verbatim at its pivot column.
  std::vector<Residue> digits(static_cast<std::size_t>(s.rank()), 0);
  const Residue p = s.field().modulus();
  for (std::uint64_t i = 0; i < *count; ++i) {
    out.emplace_back(s.field(), s.combination(digits));
    for (std::size_t d = digits.size(); d-- > 0;) {
      if (++digits[d] < p) break;
      digits[d] = 0;
    }
  }
  return out;
}

}  // namespace vg
