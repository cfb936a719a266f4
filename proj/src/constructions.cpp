#include "vgroupoid/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace vg {
namespace {

using CoordsMul = std::function<Coords(const Coords&, const Coords&)>;

/// Block-diagonal basis: the subspace S1 × S2 × ... of the concatenated space.
Subspace direct_sum(const std::vector<const Subspace*>& parts) {
  const PrimeField& f = parts.front()->field();
  Eigen::Index rows = 0, cols = 0;
  for (const auto* s : parts) {
    if (!(s->field() == f)) throw Error(Errc::field_mismatch, "summands over different fields");
    rows += s->rank();
    cols += s->ambient_dim();
  }
  CoordMatrix m = CoordMatrix::Zero(rows, cols);
  Eigen::Index r = 0, c = 0;
  for (const auto* s : parts) {
    m.block(r, c, s->rank(), s->ambient_dim()) = s->basis();
    r += s->rank();
    c += s->ambient_dim();
  }
  return Subspace::span(f, cols, m);
}

/// Block matrix from an m×m grid of scalar multiples of the n×n identity.
CoordMatrix blocks(Eigen::Index n, std::initializer_list<std::initializer_list<Residue>> grid) {
  const auto m = static_cast<Eigen::Index>(grid.size());
  CoordMatrix out = CoordMatrix::Zero(m * n, m * n);
  Eigen::Index i = 0;
  for (const auto& row : grid) {
    Eigen::Index j = 0;
    for (Residue k : row) {
      out.block(i * n, j * n, n, n) = k * CoordMatrix::Identity(n, n);
      ++j;
    }
    ++i;
  }
  return out;
}

/// Base spanned by the images of the basis of `s` under `embed`.
Subspace image_of(const Subspace& s, const CoordMatrix& embed) {
  CoordMatrix gens(s.rank(), embed.rows());
  for (Eigen::Index i = 0; i < s.rank(); ++i) {
    gens.row(i) = reduced(s.field(), embed * s.basis().row(i).transpose()).transpose();
  }
  return Subspace::span(s.field(), embed.rows(), gens);
}

Layout repeat_layout(const Layout& l, int times) { return Layout::tuple(std::vector<Layout>(times, l)); }

/// Builds the groupoid whose structure maps are the given matrices, restricted
/// to `carrier`, with multiplication `mul` on coordinates.
VectorGroupoid linear_vg(std::shared_ptr<const CoordinateSpace> carrier, const Subspace& base, const CoordMatrix& alpha,
                         const CoordMatrix& beta, const CoordMatrix& iota, CoordsMul mul) {
  const PrimeField& f = carrier->field();
  const FLinearMap a(f, alpha), b(f, beta), i(f, iota);
  GroupoidTables t;
  const auto n = static_cast<Index>(carrier->size());
  for (Index x = 0; x < n; ++x) {
    const Coords c = carrier->coords(x);
    t.labels.push_back(carrier->label(x));
    t.source.push_back(carrier->index_of(a.apply(c)));
    t.target.push_back(carrier->index_of(b.apply(c)));
    t.inverse.push_back(carrier->index_of(i.apply(c)));
  }
  for (const FVector& u : enumerate(base)) t.units.push_back(carrier->index_of(u.coords()));
  std::sort(t.units.begin(), t.units.end());
  t.multiply = [carrier, source = t.source, target = t.target, mul = std::move(mul)](Index x, Index y)
      -> std::optional<Index> {
    if (target[x] != source[y]) return std::nullopt;
    return carrier->index_of(mul(carrier->coords(x), carrier->coords(y)));
  };
  auto g = std::make_shared<const FiniteGroupoid>(build_groupoid(std::move(t)));
  return attach_vector_structure(std::move(g), std::move(carrier), base);
}

std::shared_ptr<const CoordinateSpace> power(const CoordinateSpace& v, int times, std::size_t max_carrier) {
  std::vector<const Subspace*> parts(times, &v.subspace());
  return CoordinateSpace::make(direct_sum(parts), repeat_layout(v.layout(), times), max_carrier);
}

std::shared_ptr<const CoordinateSpace> require_coordinates(const VectorGroupoid& v) {
  auto c = v.coordinate_space();
  if (!c) throw Error(Errc::not_coordinate_backed, "operand has no coordinate carrier");
  return c;
}

Coords concat(const Coords& a, const Coords& b) {
  Coords out(a.size() + b.size());
  out << a, b;
  return out;
}

/// Shared assembly for direct products and Whitney sums: `members` lists the
/// component pairs making up the carrier.
VectorGroupoid paired_vg(const VectorGroupoid& v, const VectorGroupoid& w, Pairing::Kind kind,
                         const std::vector<std::pair<Index, Index>>& members, std::size_t max_carrier) {
  const auto cv = require_coordinates(v);
  const auto cw = require_coordinates(w);
  const PrimeField& f = v.field();
  const Eigen::Index dim = cv->ambient_dim() + cw->ambient_dim();
  const Layout layout = Layout::tuple({cv->layout(), cw->layout()});

  std::shared_ptr<const CoordinateSpace> carrier;
  if (kind == Pairing::Kind::direct_product) {
    carrier = CoordinateSpace::make(direct_sum({&cv->subspace(), &cw->subspace()}), layout, max_carrier);
  } else {
    if (members.size() > max_carrier) {
      throw Error(Errc::size_guard, "carrier of " + std::to_string(members.size()) +
                                        " elements exceeds the limit of " + std::to_string(max_carrier));
    }
    CoordMatrix gens(static_cast<Eigen::Index>(members.size()), dim);
    for (std::size_t i = 0; i < members.size(); ++i) {
      gens.row(static_cast<Eigen::Index>(i)) = concat(cv->coords(members[i].first), cw->coords(members[i].second)).transpose();
    }
    carrier = CoordinateSpace::make(Subspace::span(f, dim, gens), layout, max_carrier);
    if (carrier->size() != members.size()) throw Error(Errc::not_a_subspace, "pullback is not closed");
  }

  const auto n = static_cast<Index>(carrier->size());
  std::vector<std::pair<Index, Index>> comp(n);
  const auto dv = cv->ambient_dim();
  for (Index x = 0; x < n; ++x) {
    const Coords c = carrier->coords(x);
    comp[x] = {cv->index_of(c.head(dv)), cw->index_of(c.tail(cw->ambient_dim()))};
  }
  auto locate = [carrier, cv, cw](Index a, Index b) { return carrier->index_of(concat(cv->coords(a), cw->coords(b))); };

  const FiniteGroupoid& gv = v.groupoid();
  const FiniteGroupoid& gw = w.groupoid();
  GroupoidTables t;
  for (Index x = 0; x < n; ++x) {
    const auto [a, b] = comp[x];
    t.labels.push_back(carrier->label(x));
    t.source.push_back(locate(gv.source(a), gw.source(b)));
    t.target.push_back(locate(gv.target(a), gw.target(b)));
    t.inverse.push_back(locate(gv.inverse(a), gw.inverse(b)));
    if (gv.is_unit(a) && gw.is_unit(b)) t.units.push_back(x);
  }
  t.multiply = [&gv, &gw, &comp, &locate](Index x, Index y) -> std::optional<Index> {
    const auto l = gv.multiply(comp[x].first, comp[y].first);
    const auto r = gw.multiply(comp[x].second, comp[y].second);
    if (!l || !r) return std::nullopt;
    return locate(*l, *r);
  };
  auto g = std::make_shared<const FiniteGroupoid>(build_groupoid(std::move(t)));
  auto units = g->units();
  VectorGroupoid plain = attach_vector_structure(g, std::shared_ptr<const AbstractSpace>(carrier), units);
  auto pairing = std::make_shared<const Pairing>(Pairing{kind, v, w, std::move(comp)});
  return VectorGroupoid(plain.space_ptr(), plain.groupoid_ptr(), std::move(pairing));
}

std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void check_degree(int n) {
  if (n < 1 || n > kMaxSymmetryDegree) {
    throw Error(Errc::size_guard, "symmetry groupoid degree " + std::to_string(n) + " outside 1.." +
                                      std::to_string(kMaxSymmetryDegree));
  }
}

void check_tvg_subspace(const CoordinateSpace& space, const Subspace& w) {
  if (!(w.field() == space.field()) || w.ambient_dim() != space.ambient_dim() || !space.subspace().contains(w)) {
    throw Error(Errc::not_a_subspace, "W is not a subspace of V");
  }
}

void check_inverse_pair(const PrimeField& f, Residue p, Residue q) {
  if (f.mul(p, q) != 1) {
    throw Error(Errc::not_inverse, "p*q = " + std::to_string(f.mul(p, q)) + " is not 1 mod " +
                                       std::to_string(f.modulus()));
  }
}

}  // namespace

VectorGroupoid single_unit(std::shared_ptr<const CoordinateSpace> space) {
  const PrimeField f = space->field();
  const auto n = space->ambient_dim();
  const CoordMatrix zero = CoordMatrix::Zero(n, n);
  const CoordMatrix neg = (f.modulus() - 1) * CoordMatrix::Identity(n, n);
  const Subspace base = Subspace::zero(f, n);
  return linear_vg(std::move(space), base, zero, zero, neg,
                   [f](const Coords& x, const Coords& y) -> Coords { return reduced(f, x + y); });
}

VectorGroupoid null_vg(std::shared_ptr<const CoordinateSpace> space) {
  const auto n = space->ambient_dim();
  const CoordMatrix id = CoordMatrix::Identity(n, n);
  const Subspace base = space->subspace();
  return linear_vg(std::move(space), base, id, id, id, [](const Coords& x, const Coords&) { return x; });
}

VectorGroupoid pair_vg(std::shared_ptr<const CoordinateSpace> space, std::size_t max_carrier) {
  return vpq(std::move(space), 1, 1, max_carrier);
}

VectorGroupoid vpq(std::shared_ptr<const CoordinateSpace> space, Residue p, Residue q, std::size_t max_carrier) {
  const PrimeField f = space->field();
  p = f.reduce(p);
  q = f.reduce(q);
  check_inverse_pair(f, p, q);
  const auto n = space->ambient_dim();
  auto carrier = power(*space, 2, max_carrier);
  const Subspace base = image_of(space->subspace(), blocks(n, {{1}, {p}}).leftCols(n));
  return linear_vg(carrier, base, blocks(n, {{1, 0}, {p, 0}}), blocks(n, {{0, q}, {0, 1}}), blocks(n, {{0, q}, {p, 0}}),
                   [n](const Coords& x, const Coords& y) { return concat(x.head(n), y.tail(n)); });
}

VectorGroupoid v3(std::shared_ptr<const CoordinateSpace> space, std::size_t max_carrier) {
  const PrimeField f = space->field();
  const auto n = space->ambient_dim();
  const Residue m1 = f.modulus() - 1;
  auto carrier = power(*space, 3, max_carrier);
  const Subspace base = image_of(space->subspace(), blocks(n, {{1}, {1}, {0}}).leftCols(n));
  return linear_vg(carrier, base, blocks(n, {{1, 0, 0}, {1, 0, 0}, {0, 0, 0}}),
                   blocks(n, {{0, 1, 0}, {0, 1, 0}, {0, 0, 0}}), blocks(n, {{0, 1, 0}, {1, 0, 0}, {0, 0, m1}}),
                   [f, n](const Coords& x, const Coords& y) {
                     Coords out(3 * n);
                     out << x.head(n), y.segment(n, n), reduced(f, x.tail(n) + y.tail(n));
                     return out;
                   });
}

VectorGroupoid trivial_tvg(std::shared_ptr<const CoordinateSpace> space, const Subspace& w, std::size_t max_carrier) {
  check_tvg_subspace(*space, w);
  const PrimeField f = space->field();
  const auto n = space->ambient_dim();
  const Residue m1 = f.modulus() - 1;
  auto carrier = CoordinateSpace::make(direct_sum({&w, &space->subspace(), &w}), repeat_layout(space->layout(), 3),
                                       max_carrier);
  const Subspace base = image_of(w, blocks(n, {{1}, {0}, {1}}).leftCols(n));
  return linear_vg(carrier, base, blocks(n, {{1, 0, 0}, {0, 0, 0}, {1, 0, 0}}),
                   blocks(n, {{0, 0, 1}, {0, 0, 0}, {0, 0, 1}}), blocks(n, {{0, 0, 1}, {0, m1, 0}, {1, 0, 0}}),
                   [f, n](const Coords& x, const Coords& y) {
                     Coords out(3 * n);
                     out << x.head(n), reduced(f, x.segment(n, n) + y.segment(n, n)), y.tail(n);
                     return out;
                   });
}

VectorGroupoid direct_product(const VectorGroupoid& v, const VectorGroupoid& w, std::size_t max_carrier) {
  if (!(v.field() == w.field())) throw Error(Errc::field_mismatch, "factors over different fields");
  return paired_vg(v, w, Pairing::Kind::direct_product, {}, max_carrier);
}

VectorGroupoid whitney_sum(const VectorGroupoid& v, const VectorGroupoid& w, std::size_t max_carrier) {
  if (!(v.field() == w.field())) throw Error(Errc::field_mismatch, "summands over different fields");
  const auto cv = require_coordinates(v);
  const auto cw = require_coordinates(w);
  if (cv->ambient_dim() != cw->ambient_dim()) throw Error(Errc::base_mismatch, "bases live in different spaces");

  // Identify the two bases by coordinates.
  std::vector<std::int64_t> to_v(w.size(), -1);
  for (Index u : w.base()) {
    const auto in_v = cv->find(cw->coords(u));
    if (!in_v || !v.groupoid().is_unit(*in_v)) throw Error(Errc::base_mismatch, "bases differ at " + cw->label(u));
    to_v[u] = *in_v;
  }
  if (v.base().size() != w.base().size()) throw Error(Errc::base_mismatch, "bases have different sizes");

  std::map<std::pair<Index, Index>, std::vector<Index>> by_anchor;
  for (Index a = 0; a < v.size(); ++a) by_anchor[{v.groupoid().source(a), v.groupoid().target(a)}].push_back(a);
  std::vector<std::pair<Index, Index>> members;
  for (Index b = 0; b < w.size(); ++b) {
    const auto key = std::make_pair(static_cast<Index>(to_v[w.groupoid().source(b)]),
                                    static_cast<Index>(to_v[w.groupoid().target(b)]));
    const auto it = by_anchor.find(key);
    if (it == by_anchor.end()) continue;
    for (Index a : it->second) members.emplace_back(a, b);
  }
  return paired_vg(v, w, Pairing::Kind::whitney_sum, members, max_carrier);
}

std::string PartialBijection::label() const {
  std::string out = "[";
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (i) out += ',';
    out += "x" + std::to_string(domain[i] + 1) + "->x" + std::to_string(image[i] + 1);
  }
  return out + "]";
}

int PartialBijection::sign() const {
  // Parity from the cycle decomposition: each cycle of length L contributes L-1 transpositions.
  std::vector<char> seen(domain.size(), 0);
  int transpositions = 0;
  for (std::size_t start = 0; start < domain.size(); ++start) {
    if (seen[start]) continue;
    std::size_t i = start;
    int length = 0;
    while (!seen[i]) {
      seen[i] = 1;
      ++length;
      i = static_cast<std::size_t>(std::lower_bound(domain.begin(), domain.end(), image[i]) - domain.begin());
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection out{n, domain, image};
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto pos = std::lower_bound(domain.begin(), domain.end(), image[i]) - domain.begin();
    out.image[static_cast<std::size_t>(pos)] = domain[i];
  }
  return out;
}

PartialBijection PartialBijection::after(const PartialBijection& g) const {
  if (g.domain != domain) throw Error(Errc::domain_mismatch, "composition of partial bijections with different domains");
  PartialBijection out{n, domain, image};
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto pos = std::lower_bound(domain.begin(), domain.end(), g.image[i]) - domain.begin();
    out.image[i] = image[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<PartialBijection> partial_bijections(int n) {
  std::vector<PartialBijection> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> domain;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) domain.push_back(i);
    }
    std::vector<int> image = domain;
    do {
      out.push_back({n, domain, image});
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return out;
}

FiniteGroupoid symmetry_groupoid(int n) {
  check_degree(n);
  const auto all = partial_bijections(n);
  std::map<std::vector<int>, Index> unit_of;
  std::map<std::string, Index> position;
  GroupoidTables t;
  for (Index i = 0; i < all.size(); ++i) {
    t.labels.push_back(all[i].label());
    position[t.labels.back()] = i;
    if (all[i].image == all[i].domain) {
      unit_of[all[i].domain] = i;
      t.units.push_back(i);
    }
  }
  for (const auto& f : all) {
    const Index u = unit_of.at(f.domain);
    t.source.push_back(u);
    t.target.push_back(u);
    t.inverse.push_back(position.at(f.inverse().label()));
  }
  t.multiply = [&all, &position](Index x, Index y) -> std::optional<Index> {
    if (all[x].domain != all[y].domain) return std::nullopt;
    return position.at(all[x].after(all[y]).label());
  };
  return build_groupoid(std::move(t));
}

std::pair<std::uint64_t, std::uint64_t> sg_cardinality(int n) {
  if (n < 1 || n > 20) throw Error(Errc::size_guard, "degree " + std::to_string(n) + " outside 1..20");
  std::uint64_t total = 0;
  for (int k = 1; k <= n; ++k) total += factorial(k) * binomial(n, k);
  return {total, (std::uint64_t{1} << n) - 1};
}

FiniteGroupoid sign_group() {
  GroupoidTables t;
  t.labels = {"+1", "-1"};
  t.source = {0, 0};
  t.target = {0, 0};
  t.inverse = {0, 1};
  t.units = {0};
  t.multiply = [](Index x, Index y) -> std::optional<Index> { return x ^ y; };
  return build_groupoid(std::move(t));
}

void ConstructionSpec::validate() const {
  using K = Kind;
  const bool needs_space = kind != K::direct_product && kind != K::whitney && kind != K::symmetry && kind != K::sign;
  if (needs_space && !space) throw Error(Errc::domain_mismatch, "construction needs a space");
  // Carrier bound without building it, capped to avoid overflow.
  auto guard = [&](std::vector<std::size_t> factors) {
    std::size_t total = 1;
    for (std::size_t f : factors) {
      total = f != 0 && total > (max_carrier + 1) / f ? max_carrier + 1 : total * f;
    }
    if (total > max_carrier) {
      throw Error(Errc::size_guard, "carrier exceeds the limit of " + std::to_string(max_carrier));
    }
  };
  switch (kind) {
    case K::pair:
      guard({space->size(), space->size()});
      break;
    case K::vpq:
      check_inverse_pair(space->field(), space->field().reduce(p), space->field().reduce(q));
      guard({space->size(), space->size()});
      break;
    case K::v3:
      guard({space->size(), space->size(), space->size()});
      break;
    case K::tvg: {
      if (!subspace) throw Error(Errc::not_a_subspace, "tvg needs a subspace W");
      check_tvg_subspace(*space, *subspace);
      const std::size_t w = subspace->cardinality().value_or(max_carrier + 1);
      guard({space->size(), w, w});
      break;
    }
    case K::direct_product:
    case K::whitney:
      if (!left || !right) throw Error(Errc::domain_mismatch, "construction needs two operands");
      if (!(left->field() == right->field())) throw Error(Errc::field_mismatch, "operands over different fields");
      require_coordinates(*left);
      require_coordinates(*right);
      if (kind == K::direct_product) guard({left->size(), right->size()});
      break;
    case K::symmetry:
      check_degree(degree);
      break;
    default:
      break;
  }
}

Construction build(const ConstructionSpec& spec) {
  using K = ConstructionSpec::Kind;
  spec.validate();
  auto wrap = [](VectorGroupoid v) {
    auto ptr = std::make_shared<const VectorGroupoid>(std::move(v));
    return Construction{ptr->groupoid_ptr(), ptr};
  };
  switch (spec.kind) {
    case K::single_unit: return wrap(single_unit(spec.space));
    case K::null: return wrap(null_vg(spec.space));
    case K::pair: return wrap(pair_vg(spec.space, spec.max_carrier));
    case K::vpq: return wrap(vpq(spec.space, spec.p, spec.q, spec.max_carrier));
    case K::v3: return wrap(v3(spec.space, spec.max_carrier));
    case K::tvg: return wrap(trivial_tvg(spec.space, *spec.subspace, spec.max_carrier));
    case K::direct_product: return wrap(direct_product(*spec.left, *spec.right, spec.max_carrier));
    case K::whitney: return wrap(whitney_sum(*spec.left, *spec.right, spec.max_carrier));
    case K::symmetry: return {std::make_shared<const FiniteGroupoid>(symmetry_groupoid(spec.degree)), nullptr};
    case K::sign: return {std::make_shared<const FiniteGroupoid>(sign_group()), nullptr};
  }
  throw Error(Errc::domain_mismatch, "unknown construction kind");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"single_unit", "single_unit(V)", "V over the single unit 0, product x+y"},
      {"null", "null(V)", "every element a unit, only x.x = x"},
      {"pair", "pair(V)", "V x V with (x,y)(y,z) = (x,z)"},
      {"vpq", "vpq(V, p=a, q=b)", "pair groupoid twisted by scalars with pq = 1"},
      {"v3", "v3(V)", "V^3 with (x1,x2,x3)(x2,y2,y3) = (x1,y2,x3+y3)"},
      {"tvg", "tvg(V, W)", "W x V x W with middle components adding"},
      {"product", "product(G, H)", "componentwise direct product"},
      {"whitney", "whitney(G, H)", "pullback of two vector groupoids over a common base"},
      {"sg", "sg(n)", "partial bijections of an n-set, 1 <= n <= 6"},
      {"sign", "sign()", "the group {+1,-1} over the unit +1"},
  };
  return entries;
}

}  // namespace vg
