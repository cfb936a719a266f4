#include "vgroupoid/morphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "vgroupoid/constructions.hpp"

namespace vg {
namespace {

Coords concat(const Coords& a, const Coords& b) {
  Coords out(a.size() + b.size());
  out << a, b;
  return out;
}

void check_map(const GroupoidMorphism& m) {
  if (m.map.size() != m.source->size()) throw Error(Errc::domain_mismatch, "map is not total on the source");
  for (Index y : m.map) {
    if (y >= m.target->size()) throw Error(Errc::domain_mismatch, "map leaves the target carrier");
  }
}

}  // namespace

std::vector<std::pair<Index, Index>> GroupoidMorphism::unit_map() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index u : source->units()) out.emplace_back(u, map[u]);
  return out;
}

GroupoidMorphism make_morphism(std::shared_ptr<const FiniteGroupoid> source,
                               std::shared_ptr<const FiniteGroupoid> target, std::vector<Index> map,
                               const std::optional<std::vector<std::pair<Index, Index>>>& unit_map) {
  GroupoidMorphism m{std::move(source), std::move(target), std::move(map), {}};
  check_map(m);
  if (unit_map) {
    for (const auto& [u, image] : *unit_map) {
      if (u >= m.source->size() || !m.source->is_unit(u)) throw Error(Errc::not_a_unit, "f0 given on a non-unit");
      if (m.map[u] != image) {
        throw Error(Errc::unit_map_conflict, "f0(" + m.source->label(u) + ") = " + m.target->label(image) +
                                                 " but f gives " + m.target->label(m.map[u]));
      }
    }
  }
  return m;
}

GroupoidMorphism compose(const GroupoidMorphism& outer, const GroupoidMorphism& inner) {
  if (inner.target != outer.source) throw Error(Errc::domain_mismatch, "morphisms do not chain");
  std::vector<Index> map(inner.map.size());
  for (Index x = 0; x < map.size(); ++x) map[x] = outer.map[inner.map[x]];
  return make_morphism(inner.source, outer.target, std::move(map));
}

AxiomReport verify_morphism(const GroupoidMorphism& m, std::size_t witness_cap) {
  check_map(m);
  AxiomReport r(witness_cap);
  const FiniteGroupoid& g = *m.source;
  const FiniteGroupoid& h = *m.target;
  const auto n = static_cast<Index>(g.size());
  auto L = [&](Index x) { return g.label(x); };
  auto R = [&](Index y) { return h.label(y); };
  const auto& f = m.map;

  r.law("composability-preserved");
  r.law("product-preserved");
  for (Index x = 0; x < n; ++x) {
    for (Index y : g.alpha_fibre(g.target(x))) {
      r.examine("composability-preserved");
      const auto image = h.multiply(f[x], f[y]);
      if (!image) {
        r.fail("composability-preserved", {x, y}, {L(x), L(y)}, "composable images",
               R(f[x]) + " and " + R(f[y]) + " not composable");
        continue;
      }
      r.examine("product-preserved");
      const Index expected = f[*g.multiply(x, y)];
      if (*image != expected) r.fail("product-preserved", {x, y}, {L(x), L(y)}, R(expected), R(*image));
    }
  }

  r.law("units-to-units");
  for (Index u : g.units()) {
    r.examine("units-to-units");
    if (!h.is_unit(f[u])) r.fail("units-to-units", {u}, {L(u)}, "a unit", R(f[u]));
  }

  for (const char* id : {"inverse-preserved", "source-intertwined", "target-intertwined"}) r.law(id);
  for (Index x = 0; x < n; ++x) {
    r.examine("inverse-preserved");
    if (f[g.inverse(x)] != h.inverse(f[x])) {
      r.fail("inverse-preserved", {x}, {L(x)}, R(h.inverse(f[x])), R(f[g.inverse(x)]));
    }
    r.examine("source-intertwined");
    if (h.source(f[x]) != f[g.source(x)]) {
      r.fail("source-intertwined", {x}, {L(x)}, R(f[g.source(x)]), R(h.source(f[x])));
    }
    r.examine("target-intertwined");
    if (h.target(f[x]) != f[g.target(x)]) {
      r.fail("target-intertwined", {x}, {L(x)}, R(f[g.target(x)]), R(h.target(f[x])));
    }
  }
  return r;
}

bool reflects_failure(const GroupoidMorphism& m, Index x, Index y) {
  return !composable(*m.source, x, y) && m.target->composable(m.map.at(x), m.map.at(y));
}

AxiomReport verify_homomorphism(const GroupoidMorphism& m, std::size_t witness_cap) {
  check_map(m);
  AxiomReport r(witness_cap);
  const FiniteGroupoid& g = *m.source;
  const FiniteGroupoid& h = *m.target;
  const char* id = "composability-reflected";
  r.law(id);
  auto report = [&](std::int64_t tier, Index x, Index y) {
    r.examine(id);
    if (reflects_failure(m, x, y)) {
      r.fail(id, {tier, x, y}, {g.label(x), g.label(y)}, "not composable images",
             h.label(m.map[x]) + " and " + h.label(m.map[y]) + " composable");
    }
  };
  std::vector<std::pair<Index, Index>> probes = m.probe_pairs;
  std::sort(probes.begin(), probes.end());
  for (const auto& [x, y] : probes) report(0, x, y);
  const auto n = static_cast<Index>(g.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!std::binary_search(probes.begin(), probes.end(), std::make_pair(x, y))) report(1, x, y);
    }
  }
  return r;
}

AxiomReport verify_vector_morphism(const GroupoidMorphism& m, const VectorGroupoid& src, const VectorGroupoid& dst,
                                   std::size_t witness_cap) {
  if (m.source.get() != &src.groupoid() || m.target.get() != &dst.groupoid()) {
    throw Error(Errc::carrier_mismatch, "morphism does not run between the given vector groupoids");
  }
  AxiomReport r = verify_morphism(m, witness_cap);
  r.merge(check_linear(m.map, src.space(), dst.space(), witness_cap));
  return r;
}

AnchorMorphism anchor_morphism(const VectorGroupoid& v) {
  const auto space = v.coordinate_space();
  if (!space) throw Error(Errc::not_coordinate_backed, "anchor needs a coordinate carrier");
  const FiniteGroupoid& g = v.groupoid();
  CoordMatrix gens(static_cast<Eigen::Index>(v.base().size()), space->ambient_dim());
  for (std::size_t i = 0; i < v.base().size(); ++i) {
    gens.row(static_cast<Eigen::Index>(i)) = space->coords(v.base()[i]).transpose();
  }
  auto base = CoordinateSpace::make(Subspace::span(v.field(), space->ambient_dim(), gens), space->layout(),
                                    v.base().size());
  const std::size_t pair_size = v.base().size() * v.base().size();
  VectorGroupoid target = pair_vg(base, std::max(pair_size, kDefaultMaxCarrier));
  const auto& carrier = *target.coordinate_space();
  std::vector<Index> map(g.size());
  for (Index x = 0; x < g.size(); ++x) {
    map[x] = carrier.index_of(concat(space->coords(g.source(x)), space->coords(g.target(x))));
  }
  GroupoidMorphism m = make_morphism(v.groupoid_ptr(), target.groupoid_ptr(), std::move(map));
  return {std::move(target), std::move(m)};
}

GroupoidMorphism sgn_sharp(int n) {
  auto source = std::make_shared<const FiniteGroupoid>(symmetry_groupoid(n));
  auto target = std::make_shared<const FiniteGroupoid>(sign_group());
  const auto all = partial_bijections(n);
  std::vector<Index> map(all.size());
  for (Index i = 0; i < all.size(); ++i) map[i] = all[i].sign() == 1 ? 0 : 1;
  GroupoidMorphism m = make_morphism(source, target, std::move(map));
  if (n == 4) {
    const auto f = source->find("[x1->x2,x2->x3,x3->x1]");
    const auto h = source->find("[x1->x4,x3->x3,x4->x1]");
    m.probe_pairs = {{*f, *h}, {*h, *f}};
  }
  return m;
}

GroupoidMorphism projection(const VectorGroupoid& v, int which) {
  const Pairing* p = v.pairing();
  if (!p) throw Error(Errc::domain_mismatch, "not a product or Whitney sum");
  if (which != 1 && which != 2) throw Error(Errc::domain_mismatch, "projection index must be 1 or 2");
  const VectorGroupoid& part = which == 1 ? p->first : p->second;
  std::vector<Index> map;
  map.reserve(p->components.size());
  for (const auto& [a, b] : p->components) map.push_back(which == 1 ? a : b);
  return make_morphism(v.groupoid_ptr(), part.groupoid_ptr(), std::move(map));
}

UniversalMap whitney_universal(const VectorGroupoid& u, const GroupoidMorphism& q, const GroupoidMorphism& q2,
                               const VectorGroupoid& sum, std::size_t witness_cap) {
  const Pairing* p = sum.pairing();
  if (!p || p->kind != Pairing::Kind::whitney_sum) throw Error(Errc::carrier_mismatch, "target is not a Whitney sum");
  if (q.source.get() != &u.groupoid() || q2.source.get() != &u.groupoid()) {
    throw Error(Errc::carrier_mismatch, "q and q' must start at U");
  }
  if (q.target.get() != &p->first.groupoid() || q2.target.get() != &p->second.groupoid()) {
    throw Error(Errc::carrier_mismatch, "q and q' must land in the summands");
  }
  std::map<std::pair<Index, Index>, Index> position;
  for (Index w = 0; w < p->components.size(); ++w) position[p->components[w]] = w;

  const auto n = static_cast<Index>(u.size());
  std::vector<Index> map(n);
  for (Index x = 0; x < n; ++x) {
    const auto it = position.find({q.map[x], q2.map[x]});
    if (it == position.end()) {
      throw Error(Errc::image_outside_pullback, "(" + q.target->label(q.map[x]) + ", " + q2.target->label(q2.map[x]) +
                                                    ") is not in the Whitney sum");
    }
    map[x] = it->second;
  }
  UniversalMap out{make_morphism(u.groupoid_ptr(), sum.groupoid_ptr(), std::move(map)), AxiomReport(witness_cap)};
  AxiomReport& r = out.report;
  const GroupoidMorphism p1 = projection(sum, 1);
  const GroupoidMorphism p2 = projection(sum, 2);
  const auto& phi = out.phi.map;
  auto L = [&](Index x) { return u.groupoid().label(x); };

  for (const char* id : {"first-projection-commutes", "second-projection-commutes", "pointwise-unique",
                         "perturbation-detected"}) {
    r.law(id);
  }
  for (Index x = 0; x < n; ++x) {
    r.examine("first-projection-commutes");
    if (p1.map[phi[x]] != q.map[x]) {
      r.fail("first-projection-commutes", {x}, {L(x)}, q.target->label(q.map[x]), q.target->label(p1.map[phi[x]]));
    }
    r.examine("second-projection-commutes");
    if (p2.map[phi[x]] != q2.map[x]) {
      r.fail("second-projection-commutes", {x}, {L(x)}, q2.target->label(q2.map[x]),
             q2.target->label(p2.map[phi[x]]));
    }
    // Any ψ with p∘ψ = q and p'∘ψ = q' must agree with φ at x: count the
    // carrier elements satisfying both equations there.
    std::size_t solutions = 0;
    for (Index w = 0; w < sum.size(); ++w) {
      const bool fits = p1.map[w] == q.map[x] && p2.map[w] == q2.map[x];
      if (fits) ++solutions;
      if (w == phi[x]) continue;
      r.examine("perturbation-detected");
      if (fits) r.fail("perturbation-detected", {x, w}, {L(x), sum.groupoid().label(w)}, "a broken equation", "both hold");
    }
    r.examine("pointwise-unique");
    if (solutions != 1) {
      r.fail("pointwise-unique", {x}, {L(x)}, "1 solution", std::to_string(solutions) + " solutions");
    }
  }
  r.merge(verify_vector_morphism(out.phi, u, sum, witness_cap), "phi:");
  return out;
}

}  // namespace vg
