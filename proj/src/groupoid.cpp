#include "vgroupoid/groupoid.hpp"

#include <algorithm>
#include <string>

namespace vg {
namespace {

constexpr const char* kUndefined = "undefined";

using Key = std::vector<std::int64_t>;

void require_total(const std::vector<Index>& map, std::size_t n, const char* name) {
  if (map.size() != n) {
    throw Error(Errc::partial_map, std::string(name) + " has " + std::to_string(map.size()) + " entries for " +
                                       std::to_string(n) + " elements");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (map[i] >= n) throw Error(Errc::partial_map, std::string(name) + " undefined at element " + std::to_string(i));
  }
}

std::string opt_label(const FiniteGroupoid& g, std::optional<Index> x) { return x ? g.label(*x) : kUndefined; }

}  // namespace

std::optional<Index> FiniteGroupoid::multiply(Index x, Index y) const {
  if (target_[x] != source_[y]) return std::nullopt;
  return products_[row_offset_[x] + fibre_pos_[y]];
}

std::optional<Index> FiniteGroupoid::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Index>(i);
  }
  return std::nullopt;
}

GroupoidTables FiniteGroupoid::tables() const {
  GroupoidTables t;
  t.labels = labels_;
  t.source = source_;
  t.target = target_;
  t.inverse = inverse_;
  t.units = units_;
  // Captures a copy so the tables outlive this object.
  auto self = std::make_shared<FiniteGroupoid>(*this);
  t.multiply = [self](Index x, Index y) { return self->multiply(x, y); };
  return t;
}

FiniteGroupoid build_groupoid(GroupoidTables t) {
  const std::size_t n = t.labels.size();
  if (n == 0) throw Error(Errc::partial_map, "empty carrier");
  require_total(t.source, n, "source");
  require_total(t.target, n, "target");
  require_total(t.inverse, n, "inverse");
  if (!t.multiply) throw Error(Errc::partial_map, "multiplication not provided");

  FiniteGroupoid g;
  g.labels_ = std::move(t.labels);
  g.source_ = std::move(t.source);
  g.target_ = std::move(t.target);
  g.inverse_ = std::move(t.inverse);
  g.unit_mask_.assign(n, 0);
  for (Index u : t.units) {
    if (u >= n) throw Error(Errc::partial_map, "unit outside the carrier");
    g.unit_mask_[u] = 1;
  }
  for (Index x = 0; x < n; ++x) {
    if (g.unit_mask_[x]) g.units_.push_back(x);
  }

  g.alpha_fibres_.assign(n, {});
  g.beta_fibres_.assign(n, {});
  g.fibre_pos_.assign(n, 0);
  for (Index x = 0; x < n; ++x) {
    auto& fibre = g.alpha_fibres_[g.source_[x]];
    g.fibre_pos_[x] = static_cast<Index>(fibre.size());
    fibre.push_back(x);
    g.beta_fibres_[g.target_[x]].push_back(x);
  }

  g.row_offset_.resize(n);
  std::size_t offset = 0;
  for (Index x = 0; x < n; ++x) {
    g.row_offset_[x] = offset;
    offset += g.alpha_fibres_[g.target_[x]].size();
  }
  g.products_.resize(offset);

  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const auto product = t.multiply(x, y);
      const bool expected = g.target_[x] == g.source_[y];
      if (expected && !product) {
        throw Error(Errc::mul_domain_mismatch,
                    "product missing on composable pair (" + g.labels_[x] + ", " + g.labels_[y] + ")");
      }
      if (!expected && product) {
        throw Error(Errc::mul_domain_mismatch,
                    "product defined on non-composable pair (" + g.labels_[x] + ", " + g.labels_[y] + ")");
      }
      if (!product) continue;
      if (*product >= n) {
        throw Error(Errc::partial_map, "product of (" + g.labels_[x] + ", " + g.labels_[y] + ") outside the carrier");
      }
      g.products_[g.row_offset_[x] + g.fibre_pos_[y]] = *product;
    }
  }
  return g;
}

bool composable(const FiniteGroupoid& g, Index x, Index y) {
  if (x >= g.size() || y >= g.size()) throw Error(Errc::unknown_element, "element outside the carrier");
  return g.composable(x, y);
}

// ---------------------------------------------------------------------------

AxiomReport verify_brandt(const FiniteGroupoid& g, std::size_t witness_cap) {
  AxiomReport r(witness_cap);
  const auto n = static_cast<Index>(g.size());
  auto L = [&](Index x) { return g.label(x); };

  for (const char* id : {"alpha-onto-units", "beta-onto-units", "G1", "G2", "G3"}) r.law(id);

  // Source and target land in the unit set and hit every unit.
  auto onto = [&](const char* id, auto map, auto fibre) {
    for (Index x = 0; x < n; ++x) {
      r.examine(id);
      if (!g.is_unit(map(x))) r.fail(id, {0, x}, {L(x)}, "a unit", L(map(x)));
    }
    for (Index u : g.units()) {
      r.examine(id);
      if (fibre(u).empty()) r.fail(id, {1, u}, {L(u)}, "in the image", "not hit");
    }
  };
  onto("alpha-onto-units", [&](Index x) { return g.source(x); }, [&](Index u) { return g.alpha_fibre(u); });
  onto("beta-onto-units", [&](Index x) { return g.target(x); }, [&](Index u) { return g.beta_fibre(u); });

  // G1: over every triple where either bracketing is defined.
  for (Index x = 0; x < n; ++x) {
    for (Index y : g.alpha_fibre(g.target(x))) {
      const Index xy = *g.multiply(x, y);
      for (Index z : g.alpha_fibre(g.target(xy))) {
        r.examine("G1");
        const Index left = *g.multiply(xy, z);
        const auto yz = g.multiply(y, z);
        const auto right = yz ? g.multiply(x, *yz) : std::nullopt;
        if (right != left) r.fail("G1", {x, y, z}, {L(x), L(y), L(z)}, L(left), opt_label(g, right));
      }
    }
  }
  for (Index y = 0; y < n; ++y) {
    for (Index z : g.alpha_fibre(g.target(y))) {
      const Index yz = *g.multiply(y, z);
      for (Index x : g.beta_fibre(g.source(yz))) {
        const auto xy = g.multiply(x, y);
        const auto left = xy ? g.multiply(*xy, z) : std::nullopt;
        if (left) continue;  // covered by the first pass
        r.examine("G1");
        r.fail("G1", {x, y, z}, {L(x), L(y), L(z)}, L(*g.multiply(x, yz)), kUndefined);
      }
    }
  }

  for (Index x = 0; x < n; ++x) {
    r.examine("G2", 2);
    const auto left_unit = g.multiply(g.source(x), x);
    if (left_unit != x) r.fail("G2", {x, 0}, {L(x)}, L(x), "alpha(x)*x = " + opt_label(g, left_unit));
    const auto right_unit = g.multiply(x, g.target(x));
    if (right_unit != x) r.fail("G2", {x, 1}, {L(x)}, L(x), "x*beta(x) = " + opt_label(g, right_unit));

    r.examine("G3", 2);
    const Index inv = g.inverse(x);
    const auto inv_x = g.multiply(inv, x);
    if (inv_x != g.target(x)) {
      r.fail("G3", {x, 0}, {L(x)}, "x^-1*x = " + L(g.target(x)), "x^-1*x = " + opt_label(g, inv_x));
    }
    const auto x_inv = g.multiply(x, inv);
    if (x_inv != g.source(x)) {
      r.fail("G3", {x, 1}, {L(x)}, "x*x^-1 = " + L(g.source(x)), "x*x^-1 = " + opt_label(g, x_inv));
    }
  }
  return r;
}

AxiomReport verify_calculus(const FiniteGroupoid& g, std::size_t witness_cap) {
  AxiomReport r(witness_cap);
  const auto n = static_cast<Index>(g.size());
  auto L = [&](Index x) { return g.label(x); };
  const char* ids[] = {"unit-fixed",          "anchor-of-product",      "anchor-of-inverse",
                       "cancellation",        "inverse-involution",     "inverse-of-product",
                       "inverse-division",    "source-after-inversion", "target-after-inversion",
                       "inversion-squared"};
  for (const char* id : ids) r.law(id);

  for (Index u : g.units()) {
    r.examine("unit-fixed");
    const auto uu = g.multiply(u, u);
    if (g.source(u) != u || g.target(u) != u || uu != u || g.inverse(u) != u) {
      r.fail("unit-fixed", {u}, {L(u)},
             "alpha=beta=u*u=u^-1=" + L(u),
             "alpha=" + L(g.source(u)) + " beta=" + L(g.target(u)) + " u*u=" + opt_label(g, uu) +
                 " u^-1=" + L(g.inverse(u)));
    }
  }

  std::vector<Index> seen(n, 0);
  Index stamp = 0;
  for (Index x = 0; x < n; ++x) {
    const Index ix = g.inverse(x);
    r.examine("anchor-of-inverse");
    if (g.source(ix) != g.target(x) || g.target(ix) != g.source(x)) {
      r.fail("anchor-of-inverse", {x}, {L(x)}, "(" + L(g.target(x)) + ", " + L(g.source(x)) + ")",
             "(" + L(g.source(ix)) + ", " + L(g.target(ix)) + ")");
    }
    r.examine("inverse-involution");
    if (g.inverse(ix) != x) r.fail("inverse-involution", {x}, {L(x)}, L(x), L(g.inverse(ix)));
    r.examine("source-after-inversion");
    if (g.source(ix) != g.target(x)) r.fail("source-after-inversion", {x}, {L(x)}, L(g.target(x)), L(g.source(ix)));
    r.examine("target-after-inversion");
    if (g.target(ix) != g.source(x)) r.fail("target-after-inversion", {x}, {L(x)}, L(g.source(x)), L(g.target(ix)));
    r.examine("inversion-squared");
    if (g.inverse(ix) != x) r.fail("inversion-squared", {x}, {L(x)}, L(x), L(g.inverse(ix)));

    // Left cancellation: y ↦ x·y is injective on the composable fibre.
    ++stamp;
    for (Index y : g.alpha_fibre(g.target(x))) {
      const Index xy = *g.multiply(x, y);
      r.examine("cancellation");
      if (seen[xy] == stamp) {
        // Find the earlier y with the same product for the witness.
        for (Index y1 : g.alpha_fibre(g.target(x))) {
          if (y1 != y && g.multiply(x, y1) == xy) {
            r.fail("cancellation", {0, x, y1, y}, {L(x), L(y1), L(y)}, "distinct products", "both give " + L(xy));
            break;
          }
        }
      }
      seen[xy] = stamp;

      r.examine("anchor-of-product");
      if (g.source(xy) != g.source(x) || g.target(xy) != g.target(y)) {
        r.fail("anchor-of-product", {x, y}, {L(x), L(y)}, "(" + L(g.source(x)) + ", " + L(g.target(y)) + ")",
               "(" + L(g.source(xy)) + ", " + L(g.target(xy)) + ")");
      }
      r.examine("inverse-of-product");
      const auto reversed = g.multiply(g.inverse(y), ix);
      if (reversed != g.inverse(xy)) {
        r.fail("inverse-of-product", {x, y}, {L(x), L(y)}, L(g.inverse(xy)), opt_label(g, reversed));
      }
      r.examine("inverse-division", 2);
      const auto back_left = g.multiply(ix, xy);
      if (back_left != y) r.fail("inverse-division", {x, y, 0}, {L(x), L(y)}, L(y), opt_label(g, back_left));
      const auto back_right = g.multiply(xy, g.inverse(y));
      if (back_right != x) r.fail("inverse-division", {x, y, 1}, {L(x), L(y)}, L(x), opt_label(g, back_right));
    }
  }
  // Right cancellation: y ↦ y·z is injective.
  for (Index z = 0; z < n; ++z) {
    ++stamp;
    for (Index y : g.beta_fibre(g.source(z))) {
      const Index yz = *g.multiply(y, z);
      r.examine("cancellation");
      if (seen[yz] == stamp) {
        for (Index y1 : g.beta_fibre(g.source(z))) {
          if (y1 != y && g.multiply(y1, z) == yz) {
            r.fail("cancellation", {1, z, y1, y}, {L(y1), L(y), L(z)}, "distinct products", "both give " + L(yz));
            break;
          }
        }
      }
      seen[yz] = stamp;
    }
  }
  if (!r.passed()) r.set_diagnosis("table inconsistency");
  return r;
}

// ---------------------------------------------------------------------------

std::optional<Index> IsotropyGroup::local(Index element) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), element);
  if (it == elements.end() || *it != element) return std::nullopt;
  return static_cast<Index>(it - elements.begin());
}

IsotropyGroup isotropy_group(const FiniteGroupoid& g, Index u, std::size_t witness_cap) {
  if (u >= g.size() || !g.is_unit(u)) throw Error(Errc::not_a_unit, "element is not a unit");
  IsotropyGroup grp{u, {}, {}, {}, 0, AxiomReport(witness_cap)};
  for (Index x : g.alpha_fibre(u)) {
    if (g.target(x) == u) grp.elements.push_back(x);
  }
  std::sort(grp.elements.begin(), grp.elements.end());
  const auto m = static_cast<Index>(grp.order());
  AxiomReport& r = grp.axioms;
  for (const char* id : {"closed", "associative", "identity", "inverses"}) r.law(id);
  auto L = [&](Index local) { return g.label(grp.elements[local]); };

  grp.table.assign(static_cast<std::size_t>(m) * m, 0);
  bool closed = true;
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      r.examine("closed");
      const auto prod = g.multiply(grp.elements[a], grp.elements[b]);
      const auto loc = prod ? grp.local(*prod) : std::nullopt;
      if (!loc) {
        closed = false;
        r.fail("closed", {a, b}, {L(a), L(b)}, "product in G(u)", opt_label(g, prod));
        continue;
      }
      grp.table[a * m + b] = *loc;
    }
  }
  grp.identity = *grp.local(u);
  grp.inverse.resize(m);
  for (Index a = 0; a < m; ++a) {
    const auto inv = grp.local(g.inverse(grp.elements[a]));
    grp.inverse[a] = inv.value_or(grp.identity);
    r.examine("identity");
    if (closed && (grp.multiply(grp.identity, a) != a || grp.multiply(a, grp.identity) != a)) {
      r.fail("identity", {a}, {L(a)}, L(a), "unit does not act trivially");
    }
    r.examine("inverses");
    if (!inv || (closed && (grp.multiply(a, *inv) != grp.identity || grp.multiply(*inv, a) != grp.identity))) {
      r.fail("inverses", {a}, {L(a)}, g.label(u), "x*x^-1 differs from the unit");
    }
  }
  if (closed) {
    for (Index a = 0; a < m; ++a) {
      for (Index b = 0; b < m; ++b) {
        for (Index c = 0; c < m; ++c) {
          const Index left = grp.multiply(grp.multiply(a, b), c);
          const Index right = grp.multiply(a, grp.multiply(b, c));
          if (left != right) r.fail("associative", {a, b, c}, {L(a), L(b), L(c)}, L(right), L(left));
        }
        r.examine("associative", m);
      }
    }
  }
  return grp;
}

GroupIsomorphism conjugation_iso(const FiniteGroupoid& g, Index x, std::size_t witness_cap) {
  if (x >= g.size()) throw Error(Errc::unknown_element, "element outside the carrier");
  GroupIsomorphism iso{isotropy_group(g, g.source(x), witness_cap), isotropy_group(g, g.target(x), witness_cap), {},
                       AxiomReport(witness_cap)};
  AxiomReport& r = iso.report;
  for (const char* id : {"lands-in-codomain", "bijective", "multiplicative"}) r.law(id);
  const Index ix = g.inverse(x);
  const auto& dom = iso.domain;
  const auto& cod = iso.codomain;
  bool total = true;
  iso.map.resize(dom.order());
  for (Index a = 0; a < dom.order(); ++a) {
    r.examine("lands-in-codomain");
    const Index z = dom.elements[a];
    const auto left = g.multiply(ix, z);
    std::optional<Index> image, loc;
    if (left) image = g.multiply(*left, x);
    if (image) loc = cod.local(*image);
    if (!loc) {
      total = false;
      r.fail("lands-in-codomain", {a}, {g.label(z)}, "element of G(" + g.label(cod.unit) + ")", opt_label(g, image));
      continue;
    }
    iso.map[a] = *loc;
  }
  if (!total) return iso;

  r.examine("bijective");
  std::vector<Index> hits(cod.order(), 0);
  for (Index a = 0; a < dom.order(); ++a) ++hits[iso.map[a]];
  for (Index b = 0; b < cod.order(); ++b) {
    if (hits[b] != 1) {
      r.fail("bijective", {b}, {g.label(cod.elements[b])}, "exactly one preimage",
             std::to_string(hits[b]) + " preimages");
    }
  }
  if (dom.axioms.passed() && cod.axioms.passed()) {
    for (Index a = 0; a < dom.order(); ++a) {
      for (Index b = 0; b < dom.order(); ++b) {
        const Index left = iso.map[dom.multiply(a, b)];
        const Index right = cod.multiply(iso.map[a], iso.map[b]);
        if (left != right) {
          r.fail("multiplicative", {a, b}, {g.label(dom.elements[a]), g.label(dom.elements[b])},
                 g.label(cod.elements[right]), g.label(cod.elements[left]));
        }
      }
      r.examine("multiplicative", dom.order());
    }
  }
  return iso;
}

bool is_transitive(const FiniteGroupoid& g) {
  const auto& units = g.units();
  std::vector<char> hit(g.size() * units.size(), 0);
  std::vector<std::int64_t> unit_pos(g.size(), -1);
  for (std::size_t i = 0; i < units.size(); ++i) unit_pos[units[i]] = static_cast<std::int64_t>(i);
  for (Index x = 0; x < g.size(); ++x) {
    const auto a = unit_pos[g.source(x)];
    const auto b = unit_pos[g.target(x)];
    if (a >= 0 && b >= 0) hit[static_cast<std::size_t>(a) * units.size() + static_cast<std::size_t>(b)] = 1;
  }
  for (std::size_t i = 0; i < units.size() * units.size(); ++i) {
    if (!hit[i]) return false;
  }
  return true;
}

AxiomReport transitivity_report(const FiniteGroupoid& g, std::size_t witness_cap) {
  AxiomReport r(witness_cap);
  r.law("anchor-onto");
  r.law("isotropy-isomorphic");
  const auto& units = g.units();
  const std::size_t k = units.size();
  std::vector<std::int64_t> unit_pos(g.size(), -1);
  for (std::size_t i = 0; i < k; ++i) unit_pos[units[i]] = static_cast<std::int64_t>(i);
  // First connecting element for each ordered pair of units.
  std::vector<std::int64_t> arrow(k * k, -1);
  for (Index x = 0; x < g.size(); ++x) {
    const auto a = unit_pos[g.source(x)];
    const auto b = unit_pos[g.target(x)];
    if (a < 0 || b < 0) continue;
    auto& slot = arrow[static_cast<std::size_t>(a) * k + static_cast<std::size_t>(b)];
    if (slot < 0) slot = x;
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      r.examine("anchor-onto");
      const auto x = arrow[a * k + b];
      const Index u = units[a], v = units[b];
      if (x < 0) {
        r.fail("anchor-onto", {u, v}, {g.label(u), g.label(v)}, "an element from u to v", "none");
        continue;
      }
      r.examine("isotropy-isomorphic");
      const auto iso = conjugation_iso(g, static_cast<Index>(x), witness_cap);
      if (!iso.report.passed() || !iso.domain.axioms.passed() || !iso.codomain.axioms.passed()) {
        r.fail("isotropy-isomorphic", {u, v}, {g.label(u), g.label(v)}, "conjugation by " + g.label(static_cast<Index>(x)) + " is an isomorphism",
               "fails");
      }
    }
  }
  return r;
}

bool is_group_bundle(const FiniteGroupoid& g) {
  for (Index x = 0; x < g.size(); ++x) {
    if (g.source(x) != g.target(x)) return false;
  }
  return true;
}

FiniteGroupoid isotropy_bundle(const FiniteGroupoid& g) {
  std::vector<Index> keep;
  std::vector<std::int64_t> local(g.size(), -1);
  for (Index x = 0; x < g.size(); ++x) {
    if (g.source(x) == g.target(x)) {
      local[x] = static_cast<std::int64_t>(keep.size());
      keep.push_back(x);
    }
  }
  auto to_local = [&](Index x) -> Index {
    if (local[x] < 0) throw Error(Errc::partial_map, "isotropy bundle not closed at " + g.label(x));
    return static_cast<Index>(local[x]);
  };
  GroupoidTables t;
  for (Index x : keep) {
    t.labels.push_back(g.label(x));
    t.source.push_back(to_local(g.source(x)));
    t.target.push_back(to_local(g.target(x)));
    t.inverse.push_back(to_local(g.inverse(x)));
  }
  for (Index u : g.units()) {
    if (local[u] >= 0) t.units.push_back(static_cast<Index>(local[u]));
  }
  t.multiply = [&g, &keep, to_local](Index a, Index b) -> std::optional<Index> {
    const auto prod = g.multiply(keep[a], keep[b]);
    if (!prod) return std::nullopt;
    return to_local(*prod);
  };
  return build_groupoid(std::move(t));
}

}  // namespace vg
