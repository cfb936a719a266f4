#include <set>

#include "support.hpp"

using namespace vg;

TEST_SUITE("substrate") {
  TEST_CASE("make_field accepts primes and rejects composites") {
    CHECK(make_field(5).modulus() == 5);
    CHECK(make_field(2).modulus() == 2);
    try {
      make_field(6);
      FAIL("6 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_prime);
      CHECK(errc_name(e.code()) == "NotPrime");
    }
    CHECK_THROWS_AS(make_field(1), Error);
    CHECK_THROWS_AS(make_field(0), Error);
  }

  TEST_CASE("field_inv agrees with exhaustive search") {
    for (Residue p : {2, 3, 5, 7, 11, 13}) {
      const PrimeField f(p);
      for (Residue a = 1; a < p; ++a) {
        Residue found = -1;
        for (Residue b = 0; b < p; ++b) {
          if ((a * b) % p == 1) found = b;
        }
        CHECK(field_inv(f, a) == found);
        CHECK(f.mul(a, field_inv(f, a)) == 1);
      }
    }
    CHECK(field_inv(PrimeField(5), 2) == 3);
    CHECK(field_inv(PrimeField(5), 1) == 1);
    try {
      field_inv(PrimeField(5), 0);
      FAIL("inverse of 0");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::division_by_zero);
    }
  }

  TEST_CASE("vectors reduce and refuse mixed shapes") {
    const PrimeField f(3);
    const FVector a(f, {2, 2}), b(f, {1, 2});
    CHECK((a + b) == FVector(f, {0, 1}));
    CHECK((a - b) == FVector(f, {1, 0}));
    CHECK((-a) == FVector(f, {1, 1}));
    CHECK((2 * a) == FVector(f, {1, 1}));
    CHECK(FVector(f, {4, -1}) == FVector(f, {1, 2}));
    CHECK_THROWS_AS(a + FVector(f, {1, 2, 0}), Error);
    CHECK_THROWS_AS(a + FVector(PrimeField(5), {1, 2}), Error);
  }

  TEST_CASE("linear maps compose as matrices") {
    const PrimeField f(5);
    const FLinearMap swap(f, CoordMatrix{{0, 1}, {1, 0}});
    const FLinearMap twice(f, CoordMatrix{{2, 0}, {0, 2}});
    CHECK(swap.apply(FVector(f, {1, 3})) == FVector(f, {3, 1}));
    CHECK(twice.after(swap).apply(FVector(f, {1, 3})) == FVector(f, {1, 2}));
    CHECK(FLinearMap::identity(f, 3).apply(FVector(f, {4, 0, 2})) == FVector(f, {4, 0, 2}));
  }

  TEST_CASE("subspace membership") {
    const PrimeField f2(2), f3(3);
    const auto x_axis = Subspace::span(f2, 2, CoordMatrix{{1, 0}});
    CHECK(subspace_membership(x_axis, FVector(f2, {1, 0})));
    CHECK_FALSE(subspace_membership(x_axis, FVector(f2, {0, 1})));
    const auto diag = Subspace::span(f3, 2, CoordMatrix{{1, 1}});
    CHECK(subspace_membership(diag, FVector(f3, {2, 2})));
    try {
      subspace_membership(diag, FVector(f3, {1, 1, 1}));
      FAIL("length mismatch accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::dimension_mismatch);
    }
  }

  TEST_CASE("equal subspaces have equal echelon bases") {
    const PrimeField f(3);
    const auto a = Subspace::span(f, 3, CoordMatrix{{1, 2, 0}, {0, 1, 1}});
    const auto b = Subspace::span(f, 3, CoordMatrix{{1, 0, 1}, {2, 1, 0}, {1, 0, 1}});
    CHECK(a == b);
    CHECK(a.rank() == 2);
    CHECK(a.cardinality() == 9u);
    CHECK(Subspace::full(f, 3).contains(a));
    CHECK_FALSE(a.contains(Subspace::full(f, 3)));
  }

  TEST_CASE("enumeration is lexicographic") {
    const PrimeField f2(2), f3(3);
    std::vector<std::string> seen;
    const auto z22 = vt::space(2, 2);
    for (Index i : enumerate(*z22)) seen.push_back(z22->label(i));
    CHECK(seen == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});

    const auto line = enumerate(Subspace::span(f3, 2, CoordMatrix{{1, 0}}));
    REQUIRE(line.size() == 3);
    CHECK(line[0] == FVector(f3, {0, 0}));
    CHECK(line[1] == FVector(f3, {1, 0}));
    CHECK(line[2] == FVector(f3, {2, 0}));
    CHECK(enumerate(*vt::space(5, 1)).size() == 5);
  }

  TEST_CASE("enumeration is duplicate-free, sorted and of full length") {
    for (Residue p : {2, 3, 5}) {
      const PrimeField f(p);
      for (const auto& gens : {CoordMatrix{{1, 1, 0}}, CoordMatrix{{1, 0, 2}, {0, 1, 1}}, CoordMatrix(CoordMatrix::Identity(3, 3))}) {
        const auto s = Subspace::span(f, 3, gens);
        const auto all = enumerate(s);
        CHECK(all.size() == *s.cardinality());
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
        for (const auto& v : all) CHECK(s.contains(v));
      }
    }
  }

  TEST_CASE("coordinate spaces index their members") {
    const auto s = CoordinateSpace::make(Subspace::span(PrimeField(3), 2, CoordMatrix{{1, 1}}), Layout::leaf(2));
    CHECK(s->size() == 3);
    CHECK(s->label(2) == "(2,2)");
    CHECK(s->find(Coords{{1}, {1}}) == Index{1});
    CHECK_FALSE(s->find(Coords{{1}, {0}}).has_value());
    CHECK_THROWS_AS(s->index_of(Coords{{1}, {0}}), Error);
    CHECK(s->add(1, 1) == 2);
    CHECK(s->scale(2, 2) == 1);
    try {
      CoordinateSpace::full(PrimeField(3), 9, 1000);
      FAIL("size guard");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::size_guard);
    }
  }

  TEST_CASE("check_linear") {
    const auto z32 = vt::space(3, 2);
    std::vector<Index> neg, shift;
    for (Index x = 0; x < z32->size(); ++x) {
      neg.push_back(z32->neg(x));
      shift.push_back(z32->add(x, vt::el(*z32, "(1,0)")));
    }
    CHECK(check_linear(neg, *z32, *z32).passed());

    const auto bad = check_linear(shift, *z32, *z32);
    REQUIRE_FALSE(bad.passed());
    const auto& w = bad.find("linear")->witnesses.front();
    CHECK(w.inputs == std::vector<std::string>{"0", "0", "(0,0)", "(0,0)"});
    CHECK(w.expected == "(0,0)");
    CHECK(w.actual == "(1,0)");

    const auto z23 = vt::space(2, 3);
    CHECK(check_linear(enumerate(*z23), *z23, *z23).passed());

    try {
      check_linear(std::vector<Index>{0, 1}, *z32, *z32);
      FAIL("short table accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::domain_mismatch);
    }
  }

  TEST_CASE("every subspace is a vector space under inherited operations") {
    for (Residue p : {2, 3}) {
      const auto ambient = vt::space(p, 3);
      for (const auto& gens : {CoordMatrix{{1, 1, 0}}, CoordMatrix{{1, 0, 1}, {0, 1, 1}}, CoordMatrix(0, 3)}) {
        const auto sub = Subspace::span(PrimeField(p), 3, gens);
        std::vector<Index> members;
        for (const auto& v : enumerate(sub)) members.push_back(ambient->index_of(v.coords()));
        const auto derived = DerivedSpace::inherited(ambient, members);
        CHECK(check_space_axioms(*derived).passed());
        CHECK(check_linear(enumerate(*derived), *derived, *derived).passed());
        CHECK(check_space_axioms(*CoordinateSpace::make(sub, Layout::leaf(3))).passed());
      }
    }
  }

  TEST_CASE("a non-closed subset is not a subspace") {
    const auto z3 = vt::space(3, 1);
    try {
      DerivedSpace::inherited(z3, {0, 1});
      FAIL("closed?");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_a_subspace);
    }
  }

  TEST_CASE("shifted spaces satisfy the axioms with the origin as zero") {
    const auto z32 = vt::space(3, 2);
    const Index origin = vt::el(*z32, "(1,2)");
    const auto shifted = DerivedSpace::shifted(z32, enumerate(*z32), origin);
    CHECK(shifted->parent_index(shifted->zero()) == origin);
    CHECK(check_space_axioms(*shifted).passed());
    CHECK(check_linear(enumerate(*shifted), *shifted, *shifted).passed());
    // The identity table is not linear from the shifted space to the standard one.
    CHECK_FALSE(check_linear(enumerate(*shifted), *shifted, *z32).passed());
  }

  TEST_CASE("space axiom sweep reports a broken addition") {
    // Z_3 with x + y replaced by x + y + 1: no neutral zero.
    struct Broken final : AbstractSpace {
      PrimeField f{3};
      const PrimeField& field() const override { return f; }
      std::size_t size() const override { return 3; }
      Index zero() const override { return 0; }
      Index add(Index x, Index y) const override { return static_cast<Index>((x + y + 1) % 3); }
      Index scale(Residue k, Index x) const override { return static_cast<Index>((k * x) % 3); }
      std::string label(Index x) const override { return std::to_string(x); }
    } broken;
    const auto r = check_space_axioms(broken);
    CHECK(vt::has_law_failure(r, "zero-identity"));
    CHECK_FALSE(vt::has_law_failure(r, "add-commutative"));
  }

  TEST_CASE("layouts render nested tuples") {
    const Residue c[] = {1, 0, 0, 1};
    CHECK(Layout::leaf(1).render(c) == "1");
    CHECK(Layout::leaf(2).render(c) == "(1,0)");
    CHECK(Layout::tuple({Layout::leaf(2), Layout::leaf(2)}).render(c) == "((1,0),(0,1))");
    CHECK(Layout::tuple({Layout::leaf(1), Layout::leaf(1)}).render(c) == "(1,0)");
  }
}
