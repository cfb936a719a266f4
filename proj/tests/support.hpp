#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "doctest.h"
#include "vgroupoid/constructions.hpp"
#include "vgroupoid/morphism.hpp"

namespace vt {

inline std::shared_ptr<const vg::CoordinateSpace> space(vg::Residue p, int dim) {
  return vg::CoordinateSpace::full(vg::PrimeField(p), dim);
}

/// Position of the element printed as `label`; fails the test if absent.
inline vg::Index el(const vg::FiniteGroupoid& g, std::string_view label) {
  const auto i = g.find(label);
  REQUIRE_MESSAGE(i.has_value(), "no element " << label);
  return *i;
}

inline vg::Index el(const vg::AbstractSpace& s, std::string_view label) {
  for (vg::Index i = 0; i < s.size(); ++i) {
    if (s.label(i) == label) return i;
  }
  FAIL("no element " << label);
  return 0;
}

inline std::string lbl(const vg::FiniteGroupoid& g, std::optional<vg::Index> x) {
  return x ? g.label(*x) : std::string("undefined");
}

inline bool has_law_failure(const vg::AxiomReport& r, std::string_view law) {
  const auto* l = r.find(law);
  return l && !l->passed();
}

/// The vector groupoids of the catalog at desk scale, by name.
struct Instance {
  std::string name;
  vg::VectorGroupoid v;
};

inline std::vector<Instance> small_catalog() {
  std::vector<Instance> out;
  auto z2 = space(2, 1), z3 = space(3, 1), z5 = space(5, 1), z22 = space(2, 2);
  out.push_back({"single_unit(Z2^2)", vg::single_unit(z22)});
  out.push_back({"null(Z3)", vg::null_vg(z3)});
  out.push_back({"pair(Z3)", vg::pair_vg(z3)});
  out.push_back({"vpq(Z5,2,3)", vg::vpq(z5, 2, 3)});
  out.push_back({"v3(Z2)", vg::v3(z2)});
  out.push_back({"v3(Z3)", vg::v3(z3)});
  const auto w = vg::Subspace::span(vg::PrimeField(2), 2, vg::CoordMatrix{{1, 0}});
  out.push_back({"tvg(Z2^2,<(1,0)>)", vg::trivial_tvg(z22, w)});
  const auto p2 = vg::pair_vg(z2);
  out.push_back({"product(pair,null)", vg::direct_product(p2, vg::null_vg(z2))});
  out.push_back({"whitney(pair,pair)", vg::whitney_sum(p2, p2)});
  return out;
}

}  // namespace vt
