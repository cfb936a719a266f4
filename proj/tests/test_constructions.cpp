#include <algorithm>
#include <set>

#include "support.hpp"

using namespace vg;

namespace {

/// Brute force: maps {0..n-1} -> {0..n-1, none} whose defined part permutes
/// its own domain. Returns (count, number of distinct domains).
std::pair<std::uint64_t, std::uint64_t> brute_sg(int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n + 1);
  std::uint64_t count = 0;
  std::set<unsigned> domains;
  std::vector<int> f(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    unsigned dom = 0, img = 0;
    bool injective = true;
    for (int i = 0; i < n; ++i) {
      f[i] = static_cast<int>(c % (n + 1)) - 1;
      c /= (n + 1);
      if (f[i] < 0) continue;
      dom |= 1u << i;
      if (img & (1u << f[i])) injective = false;
      img |= 1u << f[i];
    }
    if (dom != 0 && injective && dom == img) {
      ++count;
      domains.insert(dom);
    }
  }
  return {count, domains.size()};
}

/// G(u) is isomorphic to (Z_p^d, +) iff it is abelian of order p^d and every
/// element has order dividing p.
bool elementary_abelian(const IsotropyGroup& g, Residue p, int d) {
  std::size_t order = 1;
  for (int i = 0; i < d; ++i) order *= p;
  if (g.order() != order) return false;
  for (Index a = 0; a < g.order(); ++a) {
    Index power = g.identity;
    for (Residue i = 0; i < p; ++i) power = g.multiply(power, a);
    if (power != g.identity) return false;
    for (Index b = 0; b < g.order(); ++b) {
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
    }
  }
  return true;
}

void check_all_suites(const VectorGroupoid& v) {
  CHECK(verify_brandt(v.groupoid()).passed());
  CHECK(verify_calculus(v.groupoid()).passed());
  CHECK(verify_vector_axioms(v).passed());
  CHECK(verify_structural_consequences(v).passed());
}

std::string mul(const FiniteGroupoid& g, std::string_view x, std::string_view y) {
  return vt::lbl(g, g.multiply(vt::el(g, x), vt::el(g, y)));
}

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::not_prime;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("single_unit") {
    const auto v = single_unit(vt::space(2, 2));
    const auto& G = v.groupoid();
    CHECK(G.size() == 4);
    CHECK(G.units().size() == 1);
    for (Index x = 0; x < G.size(); ++x) {
      for (Index y = 0; y < G.size(); ++y) CHECK(G.composable(x, y));
      CHECK(*G.multiply(x, G.inverse(x)) == G.source(x));
    }
    const auto z5 = single_unit(vt::space(5, 1));
    CHECK(mul(z5.groupoid(), "2", "4") == std::to_string((2 + 4) % 5));
    CHECK(mul(z5.groupoid(), "2", "4") == "1");
    check_all_suites(v);
  }

  TEST_CASE("null_vg") {
    const auto v = null_vg(vt::space(3, 1));
    const auto& G = v.groupoid();
    CHECK(G.size() == 3);
    std::size_t pairs = 0;
    for (Index x = 0; x < G.size(); ++x) {
      for (Index y = 0; y < G.size(); ++y) pairs += G.composable(x, y);
      CHECK(v.space().add(x, G.inverse(x)) == v.space().add(G.source(x), G.target(x)));
    }
    CHECK(pairs == 3);
    CHECK_FALSE(is_transitive(G));
    CHECK(is_group_bundle(G));
    check_all_suites(v);
  }

  TEST_CASE("pair_vg") {
    const auto v = pair_vg(vt::space(3, 1));
    const auto& G = v.groupoid();
    CHECK(mul(G, "(1,2)", "(2,0)") == "(1,0)");
    CHECK(G.label(G.inverse(vt::el(G, "(1,2)"))) == "(2,1)");
    const Index x = vt::el(G, "(1,2)");
    CHECK(v.space().label(v.space().add(x, G.inverse(x))) == "(0,0)");
    CHECK(v.space().label(v.space().add(G.source(x), G.target(x))) == "(0,0)");
    for (Index u : G.units()) CHECK(isotropy_group(G, u).order() == 1);
    CHECK(is_transitive(G));
    check_all_suites(v);
  }

  TEST_CASE("vpq") {
    const auto v = vpq(vt::space(5, 1), 2, 3);
    const auto& G = v.groupoid();
    const Index x = vt::el(G, "(1,1)");
    CHECK(G.label(G.inverse(x)) == "(3,2)");
    CHECK(v.space().label(v.space().add(x, G.inverse(x))) == "(4,3)");
    CHECK(G.label(G.source(x)) == "(1,2)");
    CHECK(G.label(G.target(x)) == "(3,1)");
    CHECK(mul(G, "(1,1)", "(3,4)") == "(1,4)");
    CHECK(is_transitive(G));
    check_all_suites(v);
    CHECK(error_of([] { vpq(vt::space(5, 1), 2, 2); }) == Errc::not_inverse);
  }

  TEST_CASE("vpq(V,1,1) has the tables of pair_vg(V)") {
    for (auto [p, d] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
      const auto a = vpq(vt::space(p, d), 1, 1).groupoid().tables();
      const auto b = pair_vg(vt::space(p, d)).groupoid().tables();
      CHECK(a.labels == b.labels);
      CHECK(a.source == b.source);
      CHECK(a.target == b.target);
      CHECK(a.inverse == b.inverse);
      CHECK(a.units == b.units);
      for (Index x = 0; x < a.labels.size(); ++x) {
        for (Index y = 0; y < a.labels.size(); ++y) CHECK(a.multiply(x, y) == b.multiply(x, y));
      }
    }
  }

  TEST_CASE("v3") {
    const auto v = v3(vt::space(2, 1));
    const auto& G = v.groupoid();
    CHECK(mul(G, "(1,0,1)", "(0,1,1)") == "(1,1,0)");
    CHECK(G.label(G.inverse(vt::el(G, "(1,0,1)"))) == "(0,1,1)");
    CHECK(G.label(G.source(vt::el(G, "(1,0,1)"))) == "(1,1,0)");
    CHECK(G.label(G.target(vt::el(G, "(1,0,1)"))) == "(0,0,0)");
    check_all_suites(v);
  }

  TEST_CASE("trivial_tvg") {
    const auto z22 = vt::space(2, 2);
    const auto w = Subspace::span(PrimeField(2), 2, CoordMatrix{{1, 0}});
    const auto v = trivial_tvg(z22, w);
    const auto& G = v.groupoid();
    CHECK(G.size() == 2 * 4 * 2);
    CHECK(mul(G, "((1,0),(0,1),(0,0))", "((0,0),(1,1),(1,0))") == "((1,0),(1,0),(1,0))");
    CHECK(G.label(G.inverse(vt::el(G, "((1,0),(0,1),(0,0))"))) == "((0,0),(0,1),(1,0))");
    for (Index x = 0; x < G.size(); ++x) {
      const std::string& l = G.label(x);
      // α(w1,v,w2) = (w1,0,w1): read w1 straight off the label.
      const std::string w1 = l.substr(1, 5);
      CHECK(G.label(G.source(x)) == "(" + w1 + ",(0,0)," + w1 + ")");
    }
    check_all_suites(v);
    const auto off = Subspace::span(PrimeField(2), 3, CoordMatrix{{1, 0, 0}});
    CHECK(error_of([&] { trivial_tvg(z22, off); }) == Errc::not_a_subspace);
  }

  TEST_CASE("isotropy of tvg and v3 is (V,+)") {
    const auto w = Subspace::span(PrimeField(2), 2, CoordMatrix{{1, 0}});
    const auto t = trivial_tvg(vt::space(2, 2), w);
    for (Index u : t.base()) CHECK(elementary_abelian(isotropy_group(t.groupoid(), u), 2, 2));
    for (auto [p, d] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
      const auto v = v3(vt::space(p, d));
      for (Index u : v.base()) CHECK(elementary_abelian(isotropy_group(v.groupoid(), u), p, d));
    }
  }

  TEST_CASE("direct_product") {
    const auto z2 = vt::space(2, 1);
    const auto p = pair_vg(z2);
    const auto v = direct_product(p, null_vg(z2));
    CHECK(v.size() == 8);
    CHECK(v.base().size() == 2 * 2);
    REQUIRE(v.pairing());
    const auto& pr = *v.pairing();
    for (Index x = 0; x < v.size(); ++x) {
      for (Index y = 0; y < v.size(); ++y) {
        const auto [a1, b1] = pr.components[x];
        const auto [a2, b2] = pr.components[y];
        CHECK(v.groupoid().composable(x, y) ==
              (pr.first.groupoid().composable(a1, a2) && pr.second.groupoid().composable(b1, b2)));
      }
    }
    check_all_suites(v);
    CHECK(is_transitive(direct_product(p, p).groupoid()));
    CHECK(error_of([&] { direct_product(p, null_vg(vt::space(3, 1))); }) == Errc::field_mismatch);
  }

  TEST_CASE("whitney_sum") {
    const auto p = pair_vg(vt::space(2, 1));
    const auto s = whitney_sum(p, p);
    CHECK(s.size() == 4);
    for (const auto& [a, b] : s.pairing()->components) CHECK(a == b);
    CHECK(is_transitive(s.groupoid()));
    check_all_suites(s);

    const auto v = v3(vt::space(2, 1));
    const auto s3 = whitney_sum(v, v);
    CHECK(s3.size() == 16);
    check_all_suites(s3);

    CHECK(error_of([&] { whitney_sum(p, null_vg(vt::space(2, 1))); }) == Errc::base_mismatch);
  }

  TEST_CASE("whitney base bijects with the operand base") {
    for (const auto& v : {pair_vg(vt::space(2, 1)), v3(vt::space(2, 1)), vpq(vt::space(3, 1), 2, 2)}) {
      const auto s = whitney_sum(v, v);
      CHECK(s.base().size() == v.base().size());
      std::set<Index> firsts;
      for (Index u : s.base()) {
        const auto [a, b] = s.pairing()->components[u];
        CHECK(a == b);
        CHECK(v.groupoid().is_unit(a));
        firsts.insert(a);
      }
      CHECK(firsts.size() == v.base().size());
    }
  }

  TEST_CASE("symmetry groupoid") {
    const auto sg2 = symmetry_groupoid(2);
    CHECK(sg2.size() == 4);
    CHECK(sg2.size() == 2 + 2);
    CHECK(verify_brandt(sg2).passed());
    CHECK(is_group_bundle(sg2));
    CHECK_FALSE(is_transitive(sg2));
    const Index id12 = vt::el(sg2, "[x1->x1,x2->x2]");
    const auto g = isotropy_group(sg2, id12);
    CHECK(g.order() == 2);
    CHECK(g.axioms.passed());
    for (int n = 1; n <= 4; ++n) {
      const auto sg = symmetry_groupoid(n);
      CHECK(verify_brandt(sg).passed());
      CHECK(sg.units().size() == sg_cardinality(n).second);
    }
    CHECK(error_of([] { symmetry_groupoid(0); }) == Errc::size_guard);
    CHECK(error_of([] { symmetry_groupoid(7); }) == Errc::size_guard);
  }

  TEST_CASE("sg_cardinality") {
    CHECK(sg_cardinality(1) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    CHECK(sg_cardinality(3) == std::pair<std::uint64_t, std::uint64_t>{15, 7});
    CHECK(sg_cardinality(5) == std::pair<std::uint64_t, std::uint64_t>{325, 31});
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(sg_cardinality(n) == brute_sg(n));
      CHECK(partial_bijections(n).size() == brute_sg(n).first);
    }
  }

  TEST_CASE("partial bijections") {
    const auto all = partial_bijections(3);
    for (const auto& f : all) {
      CHECK(std::is_sorted(f.domain.begin(), f.domain.end()));
      auto img = f.image;
      std::sort(img.begin(), img.end());
      CHECK(img == f.domain);
      CHECK(f.after(f.inverse()).sign() == 1);
      CHECK(f.inverse().inverse() == f);
      CHECK(f.inverse().sign() == f.sign());
    }
    const PartialBijection cycle{3, {0, 1, 2}, {1, 2, 0}};
    CHECK(cycle.label() == "[x1->x2,x2->x3,x3->x1]");
    CHECK(cycle.sign() == 1);
    CHECK(PartialBijection{2, {0, 1}, {1, 0}}.sign() == -1);
    CHECK(PartialBijection{1, {0}, {0}}.sign() == 1);
  }

  TEST_CASE("sign group") {
    const auto s = sign_group();
    CHECK(s.size() == 2);
    CHECK(s.units().size() == 1);
    CHECK(mul(s, "-1", "-1") == "+1");
    CHECK(verify_brandt(s).passed());
  }

  TEST_CASE("catalog and ConstructionSpec") {
    CHECK(catalog().size() == 10);
    ConstructionSpec bad;
    bad.kind = ConstructionSpec::Kind::vpq;
    bad.space = vt::space(5, 1);
    bad.p = 2;
    bad.q = 2;
    CHECK(error_of([&] { bad.validate(); }) == Errc::not_inverse);
    bad.q = 3;
    const auto built = build(bad);
    REQUIRE(built.vector);
    CHECK(built.vector->size() == 25);

    ConstructionSpec sg;
    sg.kind = ConstructionSpec::Kind::symmetry;
    sg.degree = 9;
    CHECK(error_of([&] { sg.validate(); }) == Errc::size_guard);
    sg.degree = 3;
    const auto b = build(sg);
    CHECK(b.groupoid->size() == 15);
    CHECK_FALSE(b.vector);

    ConstructionSpec big;
    big.kind = ConstructionSpec::Kind::v3;
    big.space = vt::space(5, 2);
    CHECK(error_of([&] { big.validate(); }) == Errc::size_guard);
  }

  TEST_CASE("catalog instances pass every suite") {
    for (const auto& inst : vt::small_catalog()) {
      CAPTURE(inst.name);
      check_all_suites(inst.v);
    }
  }

  TEST_CASE("transitive kinds and group bundles") {
    for (const auto& v : {pair_vg(vt::space(3, 1)), vpq(vt::space(5, 1), 2, 3)}) {
      CHECK(is_transitive(v.groupoid()));
      CHECK(transitivity_report(v.groupoid()).passed());
    }
    CHECK(is_group_bundle(null_vg(vt::space(2, 2)).groupoid()));
    CHECK(is_group_bundle(symmetry_groupoid(3)));
    CHECK(single_unit(vt::space(3, 1)).base().size() == 1);
  }
}
