#include "vgroupoid/space.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace vg {
namespace {

constexpr std::size_t kAddTableLimit = 1024;
constexpr std::size_t kScaleTableLimit = std::size_t{1} << 20;

std::string scalar_label(Residue k) { return std::to_string(k); }

}  // namespace

std::vector<Index> enumerate(const AbstractSpace& s) {
  std::vector<Index> out(s.size());
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

Layout Layout::tuple(std::vector<Layout> parts) {
  Layout l;
  l.dim = 0;
  l.parts = std::move(parts);
  return l;
}

int Layout::total_dim() const {
  if (is_leaf()) return dim;
  int n = 0;
  for (const auto& p : parts) n += p.total_dim();
  return n;
}

std::string Layout::render(const Residue* coords) const {
  std::string out;
  if (is_leaf()) {
    if (dim == 1) return std::to_string(coords[0]);
    out += '(';
    for (int i = 0; i < dim; ++i) {
      if (i) out += ',';
      out += std::to_string(coords[i]);
    }
    out += ')';
    return out;
  }
  out += '(';
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i].render(coords + offset);
    offset += parts[i].total_dim();
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// CoordinateSpace

CoordinateSpace::CoordinateSpace(Subspace subspace, Layout layout)
    : subspace_(std::move(subspace)), layout_(std::move(layout)) {}

std::shared_ptr<const CoordinateSpace> CoordinateSpace::make(Subspace subspace, Layout layout,
                                                             std::size_t max_carrier) {
  if (layout.total_dim() != subspace.ambient_dim()) {
    throw Error(Errc::dimension_mismatch, "layout does not match the ambient dimension");
  }
  const auto count = subspace.cardinality();
  if (!count || *count > max_carrier) {
    throw Error(Errc::size_guard, "carrier of " + (count ? std::to_string(*count) : std::string("more than 2^62")) +
                                      " elements exceeds the limit of " + std::to_string(max_carrier));
  }
  std::shared_ptr<CoordinateSpace> s(new CoordinateSpace(std::move(subspace), std::move(layout)));
  s->size_ = static_cast<std::size_t>(*count);
  const auto n = static_cast<std::size_t>(s->subspace_.ambient_dim());
  s->coords_.resize(s->size_ * n);

  const Residue p = s->field().modulus();
  std::vector<Residue> digits(static_cast<std::size_t>(s->subspace_.rank()), 0);
  for (std::size_t i = 0; i < s->size_; ++i) {
    const Coords v = s->subspace_.combination(digits);
    std::copy(v.data(), v.data() + n, s->coords_.begin() + static_cast<std::ptrdiff_t>(i * n));
    for (std::size_t d = digits.size(); d-- > 0;) {
      if (++digits[d] < p) break;
      digits[d] = 0;
    }
  }

  // Fast paths for the verification sweeps; the slow path is the definition.
  if (s->size_ <= kAddTableLimit) {
    std::vector<Index> table(s->size_ * s->size_);
    for (Index x = 0; x < s->size_; ++x) {
      for (Index y = 0; y < s->size_; ++y) table[x * s->size_ + y] = s->add(x, y);
    }
    s->add_table_ = std::move(table);
  }
  if (s->size_ * static_cast<std::size_t>(p) <= kScaleTableLimit) {
    std::vector<Index> table(s->size_ * static_cast<std::size_t>(p));
    for (Residue k = 0; k < p; ++k) {
      for (Index x = 0; x < s->size_; ++x) table[static_cast<std::size_t>(k) * s->size_ + x] = s->scale(k, x);
    }
    s->scale_table_ = std::move(table);
  }
  return s;
}

std::shared_ptr<const CoordinateSpace> CoordinateSpace::full(PrimeField field, int dim, std::size_t max_carrier) {
  return make(Subspace::full(field, dim), Layout::leaf(dim), max_carrier);
}

Index CoordinateSpace::index_of_member(const Residue* v) const {
  const Residue p = field().modulus();
  std::uint64_t idx = 0;
  for (auto pivot : subspace_.pivots()) idx = idx * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(v[pivot]);
  return static_cast<Index>(idx);
}

Index CoordinateSpace::add(Index x, Index y) const {
  if (!add_table_.empty()) return add_table_[x * size_ + y];
  const auto n = static_cast<std::size_t>(ambient_dim());
  std::vector<Residue> sum(n);
  const Residue* a = &coords_[x * n];
  const Residue* b = &coords_[y * n];
  for (std::size_t i = 0; i < n; ++i) sum[i] = field().add(a[i], b[i]);
  return index_of_member(sum.data());
}

Index CoordinateSpace::scale(Residue k, Index x) const {
  k = field().reduce(k);
  if (!scale_table_.empty()) return scale_table_[static_cast<std::size_t>(k) * size_ + x];
  const auto n = static_cast<std::size_t>(ambient_dim());
  std::vector<Residue> out(n);
  const Residue* a = &coords_[x * n];
  for (std::size_t i = 0; i < n; ++i) out[i] = field().mul(k, a[i]);
  return index_of_member(out.data());
}

std::string CoordinateSpace::label(Index x) const {
  return layout_.render(&coords_[x * static_cast<std::size_t>(ambient_dim())]);
}

Coords CoordinateSpace::coords(Index x) const {
  const auto n = static_cast<std::size_t>(ambient_dim());
  Coords v(ambient_dim());
  std::copy(coords_.begin() + static_cast<std::ptrdiff_t>(x * n),
            coords_.begin() + static_cast<std::ptrdiff_t>((x + 1) * n), v.data());
  return v;
}

std::optional<Index> CoordinateSpace::find(const Coords& v) const {
  if (v.size() != ambient_dim()) return std::nullopt;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) < 0 || v(i) >= field().modulus()) return std::nullopt;
  }
  if (!subspace_.contains(v)) return std::nullopt;
  return index_of_member(v.data());
}

Index CoordinateSpace::index_of(const Coords& v) const {
  if (auto idx = find(v)) return *idx;
  throw Error(Errc::unknown_element, "coordinates are not an element of the space");
}

// ---------------------------------------------------------------------------
// DerivedSpace

DerivedSpace::DerivedSpace(std::shared_ptr<const AbstractSpace> parent, std::vector<Index> members, AddOp add,
                           ScaleOp scale, Index parent_zero)
    : parent_(std::move(parent)), members_(std::move(members)), add_(std::move(add)), scale_(std::move(scale)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  local_.assign(parent_->size(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= parent_->size()) throw Error(Errc::unknown_element, "member outside the parent space");
    local_[members_[i]] = static_cast<std::int64_t>(i);
  }
  if (local_[parent_zero] < 0) throw Error(Errc::not_a_subspace, "subset does not contain its zero");
  zero_ = static_cast<Index>(local_[parent_zero]);
  const Residue p = parent_->field().modulus();
  for (Index x : members_) {
    for (Index y : members_) {
      if (local_[add_(x, y)] < 0) throw Error(Errc::not_a_subspace, "subset not closed under addition");
    }
    for (Residue k = 0; k < p; ++k) {
      if (local_[scale_(k, x)] < 0) throw Error(Errc::not_a_subspace, "subset not closed under scaling");
    }
  }
}

std::shared_ptr<const DerivedSpace> DerivedSpace::inherited(std::shared_ptr<const AbstractSpace> parent,
                                                            std::vector<Index> members) {
  const AbstractSpace* raw = parent.get();
  const Index zero = raw->zero();
  return std::shared_ptr<const DerivedSpace>(new DerivedSpace(
      std::move(parent), std::move(members), [raw](Index x, Index y) { return raw->add(x, y); },
      [raw](Residue k, Index x) { return raw->scale(k, x); }, zero));
}

std::shared_ptr<const DerivedSpace> DerivedSpace::shifted(std::shared_ptr<const AbstractSpace> parent,
                                                          std::vector<Index> members, Index origin) {
  const AbstractSpace* raw = parent.get();
  return std::shared_ptr<const DerivedSpace>(new DerivedSpace(
      std::move(parent), std::move(members),
      [raw, origin](Index x, Index y) { return raw->sub(raw->add(x, y), origin); },
      [raw, origin](Residue k, Index x) {
        const Residue one_minus_k = raw->field().sub(1, k);
        return raw->combine(k, x, one_minus_k, origin);
      },
      origin));
}

Index DerivedSpace::add(Index x, Index y) const {
  return static_cast<Index>(local_[add_(members_[x], members_[y])]);
}

Index DerivedSpace::scale(Residue k, Index x) const {
  return static_cast<Index>(local_[scale_(k, members_[x])]);
}

std::optional<Index> DerivedSpace::local_index(Index parent) const {
  if (parent >= local_.size() || local_[parent] < 0) return std::nullopt;
  return static_cast<Index>(local_[parent]);
}

// ---------------------------------------------------------------------------
// Sweeps

AxiomReport check_space_axioms(const AbstractSpace& s, std::size_t witness_cap) {
  AxiomReport r(witness_cap);
  const auto n = static_cast<Index>(s.size());
  const Residue p = s.field().modulus();
  const Index zero = s.zero();
  auto L = [&](Index x) { return s.label(x); };
  auto key = [](std::initializer_list<std::int64_t> k) { return std::vector<std::int64_t>(k); };

  for (const char* id : {"add-commutative", "add-associative", "zero-identity", "additive-inverse",
                         "scale-distributes-over-add", "scalar-sum-distributes", "scale-compatible",
                         "one-identity"}) {
    r.law(id);
  }

  // The associativity sweep is cubic; tabulate addition once when it fits.
  std::vector<Index> add_table;
  if (n <= 4096) {
    add_table.resize(static_cast<std::size_t>(n) * n);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) add_table[static_cast<std::size_t>(x) * n + y] = s.add(x, y);
    }
  }

  for (Index x = 0; x < n; ++x) {
    r.examine("zero-identity");
    if (s.add(x, zero) != x) r.fail("zero-identity", key({x}), {L(x)}, L(x), L(s.add(x, zero)));
    r.examine("one-identity");
    if (s.scale(1, x) != x) r.fail("one-identity", key({x}), {L(x)}, L(x), L(s.scale(1, x)));

    bool has_inverse = false;
    for (Index y = 0; y < n; ++y) {
      const Index xy = s.add(x, y);
      has_inverse = has_inverse || xy == zero;
      r.examine("add-commutative");
      const Index yx = s.add(y, x);
      if (xy != yx) r.fail("add-commutative", key({x, y}), {L(x), L(y)}, L(yx), L(xy));
      if (!add_table.empty()) {
        const Index* row_xy = &add_table[static_cast<std::size_t>(xy) * n];
        const Index* row_x = &add_table[static_cast<std::size_t>(x) * n];
        const Index* row_y = &add_table[static_cast<std::size_t>(y) * n];
        for (Index z = 0; z < n; ++z) {
          if (row_xy[z] != row_x[row_y[z]]) {
            r.fail("add-associative", key({x, y, z}), {L(x), L(y), L(z)}, L(row_x[row_y[z]]), L(row_xy[z]));
          }
        }
      } else {
        for (Index z = 0; z < n; ++z) {
          const Index left = s.add(xy, z);
          const Index right = s.add(x, s.add(y, z));
          if (left != right) r.fail("add-associative", key({x, y, z}), {L(x), L(y), L(z)}, L(right), L(left));
        }
      }
      r.examine("add-associative", n);
      for (Residue k = 0; k < p; ++k) {
        r.examine("scale-distributes-over-add");
        const Index left = s.scale(k, xy);
        const Index right = s.add(s.scale(k, x), s.scale(k, y));
        if (left != right) {
          r.fail("scale-distributes-over-add", key({k, x, y}), {scalar_label(k), L(x), L(y)}, L(right), L(left));
        }
      }
    }
    r.examine("additive-inverse");
    if (!has_inverse) r.fail("additive-inverse", key({x}), {L(x)}, "some y with x+y=0", "none");

    for (Residue a = 0; a < p; ++a) {
      for (Residue b = 0; b < p; ++b) {
        r.examine("scalar-sum-distributes");
        const Index left = s.scale(s.field().add(a, b), x);
        const Index right = s.add(s.scale(a, x), s.scale(b, x));
        if (left != right) {
          r.fail("scalar-sum-distributes", key({a, b, x}), {scalar_label(a), scalar_label(b), L(x)}, L(right),
                 L(left));
        }
        r.examine("scale-compatible");
        const Index nested = s.scale(a, s.scale(b, x));
        const Index direct = s.scale(s.field().mul(a, b), x);
        if (nested != direct) {
          r.fail("scale-compatible", key({a, b, x}), {scalar_label(a), scalar_label(b), L(x)}, L(direct), L(nested));
        }
      }
    }
  }
  return r;
}

AxiomReport check_linear(std::span<const Index> table, const AbstractSpace& dom, const AbstractSpace& cod,
                         std::size_t witness_cap) {
  if (table.size() != dom.size()) {
    throw Error(Errc::domain_mismatch, "map table has " + std::to_string(table.size()) + " entries for a domain of " +
                                           std::to_string(dom.size()));
  }
  for (Index v : table) {
    if (v >= cod.size()) throw Error(Errc::domain_mismatch, "map table points outside the codomain");
  }
  AxiomReport r(witness_cap);
  r.law("linear");
  const auto n = static_cast<Index>(dom.size());
  const Residue p = dom.field().modulus();
  for (Residue a = 0; a < p; ++a) {
    for (Residue b = 0; b < p; ++b) {
      for (Index x = 0; x < n; ++x) {
        const Index ax = dom.scale(a, x);
        const Index fax = cod.scale(a, table[x]);
        for (Index y = 0; y < n; ++y) {
          const Index lhs = table[dom.add(ax, dom.scale(b, y))];
          const Index rhs = cod.add(fax, cod.scale(b, table[y]));
          if (lhs != rhs) {
            r.fail("linear", {a, b, x, y}, {scalar_label(a), scalar_label(b), dom.label(x), dom.label(y)},
                   cod.label(rhs), cod.label(lhs));
          }
        }
        r.examine("linear", n);
      }
    }
  }
  return r;
}

void check_subset_closed(const AbstractSpace& s, std::span<const Index> members, std::string_view law_id,
                         AxiomReport& report) {
  std::vector<char> in(s.size(), 0);
  for (Index m : members) in[m] = 1;
  report.law(law_id);
  report.examine(law_id);
  if (!in[s.zero()]) report.fail(law_id, {-1}, {}, "zero " + s.label(s.zero()) + " in subset", "missing");
  const Residue p = s.field().modulus();
  for (Index x : members) {
    for (Index y : members) {
      const Index sum = s.add(x, y);
      if (!in[sum]) report.fail(law_id, {0, x, y}, {s.label(x), s.label(y)}, "sum in subset", s.label(sum));
    }
    report.examine(law_id, members.size());
    for (Residue k = 0; k < p; ++k) {
      const Index kx = s.scale(k, x);
      if (!in[kx]) report.fail(law_id, {1, k, x}, {std::to_string(k), s.label(x)}, "multiple in subset", s.label(kx));
    }
    report.examine(law_id, static_cast<std::uint64_t>(p));
  }
}

}  // namespace vg
