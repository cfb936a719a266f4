#include "vgroupoid/vector_groupoid.hpp"

#include <algorithm>
#include <string>

namespace vg {
namespace {

std::vector<Index> structure_map(const FiniteGroupoid& g, Index (FiniteGroupoid::*fn)(Index) const) {
  std::vector<Index> out(g.size());
  for (Index x = 0; x < g.size(); ++x) out[x] = (g.*fn)(x);
  return out;
}

std::string opt_label(const AbstractSpace& s, std::optional<Index> x) { return x ? s.label(*x) : "undefined"; }

}  // namespace

VectorGroupoid::VectorGroupoid(std::shared_ptr<const AbstractSpace> space,
                               std::shared_ptr<const FiniteGroupoid> groupoid, std::shared_ptr<const Pairing> pairing)
    : space_(std::move(space)), groupoid_(std::move(groupoid)), pairing_(std::move(pairing)) {}

std::shared_ptr<const CoordinateSpace> VectorGroupoid::coordinate_space() const {
  return std::dynamic_pointer_cast<const CoordinateSpace>(space_);
}

VectorGroupoid attach_vector_structure(std::shared_ptr<const FiniteGroupoid> g,
                                       std::shared_ptr<const AbstractSpace> space, std::span<const Index> base) {
  if (g->size() != space->size()) {
    throw Error(Errc::carrier_mismatch, "groupoid has " + std::to_string(g->size()) + " elements, space has " +
                                            std::to_string(space->size()));
  }
  for (Index x = 0; x < g->size(); ++x) {
    if (g->label(x) != space->label(x)) {
      throw Error(Errc::carrier_mismatch, "element " + std::to_string(x) + " is " + g->label(x) +
                                              " in the groupoid but " + space->label(x) + " in the space");
    }
  }
  std::vector<Index> sorted(base.begin(), base.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted != g->units()) {
    throw Error(Errc::unit_set_mismatch, "declared base has " + std::to_string(sorted.size()) +
                                             " elements; the groupoid has " + std::to_string(g->units().size()) +
                                             " units");
  }
  return VectorGroupoid(std::move(space), std::move(g));
}

VectorGroupoid attach_vector_structure(std::shared_ptr<const FiniteGroupoid> g,
                                       std::shared_ptr<const CoordinateSpace> space, const Subspace& base) {
  if (base.ambient_dim() != space->ambient_dim()) {
    throw Error(Errc::unit_set_mismatch, "base lives in a different ambient space");
  }
  std::vector<Index> members;
  for (const FVector& v : enumerate(base)) {
    const auto idx = space->find(v.coords());
    if (!idx) throw Error(Errc::unit_set_mismatch, "base vector outside the carrier");
    members.push_back(*idx);
  }
  return attach_vector_structure(std::move(g), std::shared_ptr<const AbstractSpace>(space), members);
}

AxiomReport verify_vector_axioms(const VectorGroupoid& v, std::size_t witness_cap) {
  AxiomReport r(witness_cap);
  const AbstractSpace& s = v.space();
  const FiniteGroupoid& g = v.groupoid();
  const auto n = static_cast<Index>(g.size());
  const Residue p = s.field().modulus();
  auto L = [&](Index x) { return s.label(x); };
  auto K = [](Residue k) { return std::to_string(k); };

  if (s.size() != g.size()) throw Error(Errc::carrier_mismatch, "space and groupoid sizes differ");

  r.merge(check_space_axioms(s, witness_cap), "carrier-space:");
  check_subset_closed(s, v.base(), "base-subspace", r);

  const auto alpha = structure_map(g, &FiniteGroupoid::source);
  const auto beta = structure_map(g, &FiniteGroupoid::target);
  const auto iota = structure_map(g, &FiniteGroupoid::inverse);
  r.merge(check_linear(alpha, s, s, witness_cap), "alpha-");
  r.merge(check_linear(beta, s, s, witness_cap), "beta-");
  r.merge(check_linear(iota, s, s, witness_cap), "inverse-");

  r.law("inverse-sum");
  for (Index x = 0; x < n; ++x) {
    r.examine("inverse-sum");
    const Index lhs = s.add(x, iota[x]);
    const Index rhs = s.add(alpha[x], beta[x]);
    if (lhs != rhs) r.fail("inverse-sum", {x}, {L(x)}, L(rhs), L(lhs));
  }

  for (const char* id : {"law-well-formed", "left-additive", "left-affine", "right-additive", "right-affine"}) {
    r.law(id);
  }
  // Hot loops: count locally, report once.
  std::uint64_t well_formed_n = 0, left_add_n = 0, left_aff_n = 0, right_add_n = 0, right_aff_n = 0;
  // Every law argument must be composable with x; when α, β are linear this
  // always holds, so a failure points at the structure maps.
  auto ill_formed = [&](std::int64_t tag, Index x, Index y, const std::string& third, std::int64_t third_key,
                        const char* what) {
    r.fail("law-well-formed", {tag, x, y, third_key}, {L(x), L(y), third}, what, "not composable");
  };

  for (Index x = 0; x < n; ++x) {
    const Index bx = beta[x];
    const auto& right_of_x = g.alpha_fibre(bx);  // y with α(y) = β(x)
    for (Index y : right_of_x) {
      const Index xy = *g.multiply(x, y);
      const Index y_minus_bx = s.sub(y, bx);
      for (Index z : right_of_x) {
        const Index arg = s.add(y_minus_bx, z);
        ++well_formed_n;
        if (alpha[arg] != bx) {
          ill_formed(0, x, y, L(z), z, "alpha(y+z-beta(x)) = beta(x)");
          continue;
        }
        ++left_add_n;
        const Index lhs = *g.multiply(x, arg);
        const Index rhs = s.sub(s.add(xy, *g.multiply(x, z)), x);
        if (lhs != rhs) r.fail("left-additive", {x, y, z}, {L(x), L(y), L(z)}, L(rhs), L(lhs));
      }
      for (Residue k = 0; k < p; ++k) {
        const Residue one_minus_k = s.field().sub(1, k);
        const Index arg = s.combine(k, y, one_minus_k, bx);
        ++well_formed_n;
        if (alpha[arg] != bx) {
          ill_formed(1, x, y, K(k), k, "alpha(ky+(1-k)beta(x)) = beta(x)");
          continue;
        }
        ++left_aff_n;
        const Index lhs = *g.multiply(x, arg);
        const Index rhs = s.combine(k, xy, one_minus_k, x);
        if (lhs != rhs) r.fail("left-affine", {x, y, k}, {L(x), L(y), K(k)}, L(rhs), L(lhs));
      }
    }

    const Index ax = alpha[x];
    const auto& left_of_x = g.beta_fibre(ax);  // y with β(y) = α(x)
    for (Index y : left_of_x) {
      const Index yx = *g.multiply(y, x);
      const Index y_minus_ax = s.sub(y, ax);
      for (Index z : left_of_x) {
        const Index arg = s.add(y_minus_ax, z);
        ++well_formed_n;
        if (beta[arg] != ax) {
          ill_formed(2, x, y, L(z), z, "beta(y+z-alpha(x)) = alpha(x)");
          continue;
        }
        ++right_add_n;
        const Index lhs = *g.multiply(arg, x);
        const Index rhs = s.sub(s.add(yx, *g.multiply(z, x)), x);
        if (lhs != rhs) r.fail("right-additive", {x, y, z}, {L(x), L(y), L(z)}, L(rhs), L(lhs));
      }
      for (Residue k = 0; k < p; ++k) {
        const Residue one_minus_k = s.field().sub(1, k);
        const Index arg = s.combine(k, y, one_minus_k, ax);
        ++well_formed_n;
        if (beta[arg] != ax) {
          ill_formed(3, x, y, K(k), k, "beta(ky+(1-k)alpha(x)) = alpha(x)");
          continue;
        }
        ++right_aff_n;
        const Index lhs = *g.multiply(arg, x);
        const Index rhs = s.combine(k, yx, one_minus_k, x);
        if (lhs != rhs) r.fail("right-affine", {x, y, k}, {L(x), L(y), K(k)}, L(rhs), L(lhs));
      }
    }
  }
  r.examine("law-well-formed", well_formed_n);
  r.examine("left-additive", left_add_n);
  r.examine("left-affine", left_aff_n);
  r.examine("right-additive", right_add_n);
  r.examine("right-affine", right_aff_n);
  return r;
}

AxiomReport verify_structural_consequences(const VectorGroupoid& v, std::size_t witness_cap) {
  AxiomReport r(witness_cap);
  const AbstractSpace& s = v.space();
  const FiniteGroupoid& g = v.groupoid();
  const auto n = static_cast<Index>(g.size());
  const Index zero = s.zero();
  auto L = [&](Index x) { return s.label(x); };

  auto onto_base = [&](const char* id, const std::vector<Index>& map) {
    r.law(id);
    std::vector<char> hit(n, 0);
    for (Index x = 0; x < n; ++x) {
      r.examine(id);
      if (!g.is_unit(map[x])) r.fail(id, {0, x}, {L(x)}, "a base element", L(map[x]));
      hit[map[x]] = 1;
    }
    for (Index u : v.base()) {
      r.examine(id);
      if (!hit[u]) r.fail(id, {1, u}, {L(u)}, "in the image", "not hit");
    }
  };
  const auto alpha = structure_map(g, &FiniteGroupoid::source);
  const auto beta = structure_map(g, &FiniteGroupoid::target);
  const auto iota = structure_map(g, &FiniteGroupoid::inverse);
  onto_base("alpha-onto-base", alpha);
  onto_base("beta-onto-base", beta);
  r.merge(check_linear(alpha, s, s, witness_cap), "alpha-");
  r.merge(check_linear(beta, s, s, witness_cap), "beta-");
  r.merge(check_linear(iota, s, s, witness_cap), "inverse-");

  r.law("inverse-bijective");
  {
    std::vector<Index> hits(n, 0);
    for (Index x = 0; x < n; ++x) ++hits[iota[x]];
    for (Index x = 0; x < n; ++x) {
      r.examine("inverse-bijective");
      if (hits[x] != 1) r.fail("inverse-bijective", {x}, {L(x)}, "one preimage", std::to_string(hits[x]) + " preimages");
    }
  }

  const auto& alpha_zero = g.alpha_fibre(zero);
  const auto& beta_zero = g.beta_fibre(zero);
  std::vector<Index> isotropy_zero;
  for (Index x : alpha_zero) {
    if (beta[x] == zero) isotropy_zero.push_back(x);
  }
  check_subset_closed(s, alpha_zero, "alpha-zero-fibre-subspace", r);
  check_subset_closed(s, beta_zero, "beta-zero-fibre-subspace", r);
  check_subset_closed(s, isotropy_zero, "isotropy-zero-subspace", r);

  r.law("left-unit-zero");
  for (Index x : alpha_zero) {
    r.examine("left-unit-zero");
    const auto prod = g.multiply(zero, x);
    if (prod != x) r.fail("left-unit-zero", {x}, {L(x)}, L(x), opt_label(s, prod));
  }
  r.law("right-unit-zero");
  for (Index x : beta_zero) {
    r.examine("right-unit-zero");
    const auto prod = g.multiply(x, zero);
    if (prod != x) r.fail("right-unit-zero", {x}, {L(x)}, L(x), opt_label(s, prod));
  }

  // x ↦ x - α(x) injective on β⁻¹(0); x ↦ x - β(x) injective on α⁻¹(0).
  auto injective = [&](const char* id, const std::vector<Index>& fibre, const std::vector<Index>& shift) {
    r.law(id);
    std::vector<std::int64_t> first(n, -1);
    for (Index x : fibre) {
      r.examine(id);
      const Index key = s.sub(x, shift[x]);
      if (first[key] >= 0) {
        const auto y = static_cast<Index>(first[key]);
        r.fail(id, {y, x}, {L(y), L(x)}, "distinct images", "both map to " + L(key));
      } else {
        first[key] = x;
      }
    }
  };
  injective("target-fibre-injective", beta_zero, alpha);
  injective("source-fibre-injective", alpha_zero, beta);
  return r;
}

FibreTranslations fibre_translations(const VectorGroupoid& v, std::size_t witness_cap) {
  const AbstractSpace& s = v.space();
  const FiniteGroupoid& g = v.groupoid();
  const Index zero = s.zero();
  auto alpha_zero = DerivedSpace::inherited(v.space_ptr(), g.alpha_fibre(zero));
  auto beta_zero = DerivedSpace::inherited(v.space_ptr(), g.beta_fibre(zero));

  FibreTranslations out{{FibreTranslation::Direction::alpha_to_beta, alpha_zero, beta_zero, {}},
                        {FibreTranslation::Direction::beta_to_alpha, beta_zero, alpha_zero, {}},
                        AxiomReport(witness_cap)};
  AxiomReport& r = out.report;

  auto build = [&](FibreTranslation& t, const char* name, Index (FiniteGroupoid::*anchor)(Index) const) {
    const std::string into = std::string(name) + "-into-fibre";
    r.law(into);
    bool total = true;
    t.table.resize(t.domain->size());
    for (Index a = 0; a < t.domain->size(); ++a) {
      r.examine(into);
      const Index x = t.domain->parent_index(a);
      const Index image = s.sub((g.*anchor)(x), x);
      const auto loc = t.codomain->local_index(image);
      if (!loc) {
        total = false;
        r.fail(into, {x}, {s.label(x)}, "element of the opposite 0-fibre", s.label(image));
        continue;
      }
      t.table[a] = *loc;
    }
    if (!total) return false;
    r.merge(check_linear(t.table, *t.domain, *t.codomain, witness_cap), std::string(name) + "-");
    const std::string bij = std::string(name) + "-bijective";
    r.law(bij);
    std::vector<Index> hits(t.codomain->size(), 0);
    for (Index image : t.table) ++hits[image];
    for (Index b = 0; b < t.codomain->size(); ++b) {
      r.examine(bij);
      if (hits[b] != 1) {
        r.fail(bij, {b}, {t.codomain->label(b)}, "one preimage", std::to_string(hits[b]) + " preimages");
      }
    }
    return true;
  };
  const bool beta_ok = build(out.t_beta, "t-beta", &FiniteGroupoid::target);
  const bool alpha_ok = build(out.t_alpha, "t-alpha", &FiniteGroupoid::source);
  if (beta_ok && alpha_ok) {
    auto round_trip = [&](const char* id, const FibreTranslation& first, const FibreTranslation& second) {
      r.law(id);
      for (Index a = 0; a < first.domain->size(); ++a) {
        r.examine(id);
        const Index back = second.apply(first.apply(a));
        if (back != a) r.fail(id, {a}, {first.domain->label(a)}, first.domain->label(a), first.domain->label(back));
      }
    };
    round_trip("t-alpha-after-t-beta", out.t_beta, out.t_alpha);
    round_trip("t-beta-after-t-alpha", out.t_alpha, out.t_beta);
  }
  return out;
}

VectorGroupoid isotropy_vector_groupoid(const VectorGroupoid& v, Index u) {
  const FiniteGroupoid& g = v.groupoid();
  if (u >= g.size() || !g.is_unit(u)) throw Error(Errc::not_a_unit, "element is not a unit");
  std::vector<Index> members;
  for (Index x : g.alpha_fibre(u)) {
    if (g.target(x) == u) members.push_back(x);
  }
  auto space = DerivedSpace::shifted(v.space_ptr(), members, u);
  const AbstractSpace& parent = v.space();
  const Index local_u = *space->local_index(u);

  GroupoidTables t;
  const auto m = static_cast<Index>(space->size());
  for (Index a = 0; a < m; ++a) {
    const Index x = space->parent_index(a);
    t.labels.push_back(parent.label(x));
    t.source.push_back(local_u);
    t.target.push_back(local_u);
    const auto inv = space->local_index(g.inverse(x));
    if (!inv) throw Error(Errc::partial_map, "inversion leaves V(u) at " + parent.label(x));
    t.inverse.push_back(*inv);
  }
  t.units = {local_u};
  t.multiply = [&g, &parent, space, u](Index a, Index b) -> std::optional<Index> {
    const Index x = parent.sub(space->parent_index(a), u);
    const Index y = parent.sub(space->parent_index(b), u);
    const auto prod = g.multiply(x, y);
    if (!prod) return std::nullopt;
    return space->local_index(parent.add(*prod, u));
  };
  auto groupoid = std::make_shared<const FiniteGroupoid>(build_groupoid(std::move(t)));
  return VectorGroupoid(space, groupoid);
}

}  // namespace vg
