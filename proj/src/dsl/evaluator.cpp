#include "vgroupoid/dsl/evaluator.hpp"

#include <set>

#include "vgroupoid/constructions.hpp"

namespace vg::dsl {
namespace {

/// Elaboration failure at the current statement.
struct Elaboration {
  std::string message;
};

void flatten(const Literal& l, std::vector<Residue>& out) {
  if (!l.tuple) {
    out.push_back(l.value);
    return;
  }
  for (const auto& item : l.items) flatten(item, out);
}

Coords to_coords(const Literal& l, const PrimeField& f, Eigen::Index dim) {
  std::vector<Residue> flat;
  flatten(l, flat);
  if (static_cast<Eigen::Index>(flat.size()) != dim) {
    throw Elaboration{"element " + render(l) + " has " + std::to_string(flat.size()) + " coordinates, expected " +
                      std::to_string(dim)};
  }
  Coords c(dim);
  for (Eigen::Index i = 0; i < dim; ++i) c(i) = f.reduce(flat[static_cast<std::size_t>(i)]);
  return c;
}

class Evaluator {
 public:
  Evaluator(const EvalOptions& options, Workspace& ws) : opt_(options), ws_(ws) {}

  void operator()(const FieldDecl& d) { ws_.fields.emplace(d.name, make_field(d.modulus)); }

  void operator()(const SpaceDecl& d) {
    const PrimeField& f = ws_.fields.at(d.field);
    ws_.spaces[d.name] = CoordinateSpace::full(f, static_cast<int>(d.dim), opt_.max_carrier);
  }

  void operator()(const SubspaceDecl& d) {
    const auto& parent = ws_.spaces.at(d.space);
    const PrimeField& f = parent->field();
    CoordMatrix gens(static_cast<Eigen::Index>(d.generators.size()), parent->ambient_dim());
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
      gens.row(static_cast<Eigen::Index>(i)) = to_coords(d.generators[i], f, parent->ambient_dim()).transpose();
    }
    Subspace s = Subspace::span(f, parent->ambient_dim(), gens);
    ws_.spaces[d.name] = CoordinateSpace::make(s, parent->layout(), opt_.max_carrier);
    ws_.subspaces.emplace(d.name, std::move(s));
  }

  void operator()(const GroupoidDecl& d) {
    using K = ConstructionSpec::Kind;
    static const std::map<std::string, K> kinds = {
        {"single_unit", K::single_unit}, {"null", K::null}, {"pair", K::pair},   {"vpq", K::vpq},
        {"v3", K::v3},                   {"tvg", K::tvg},   {"product", K::direct_product},
        {"whitney", K::whitney},         {"sg", K::symmetry}, {"sign", K::sign}};
    ConstructionSpec spec;
    spec.kind = kinds.at(d.kind);
    spec.max_carrier = opt_.max_carrier;
    if (spec.kind == K::direct_product || spec.kind == K::whitney) {
      spec.left = vector_operand(d.operands[0]);
      spec.right = vector_operand(d.operands[1]);
    } else if (!d.operands.empty()) {
      spec.space = ws_.spaces.at(d.operands[0]);
      if (d.operands.size() > 1) spec.subspace = ws_.subspaces.at(d.operands[1]);
    }
    if (d.p) spec.p = *d.p;
    if (d.q) spec.q = *d.q;
    if (d.degree) spec.degree = static_cast<int>(*d.degree);
    Construction c = build(spec);
    ws_.groupoids[d.name] = GroupoidEntry{d.kind, c.groupoid, c.vector, d.operands, spec.degree};
  }

  void operator()(const MorphismDecl& d) {
    const GroupoidEntry& src = ws_.groupoids.at(d.source);
    const GroupoidEntry& dst = ws_.groupoids.at(d.target);
    GroupoidMorphism m;
    if (d.kind == "anchor") {
      m = anchor(d, src, dst);
    } else if (d.kind == "sgn_sharp") {
      if (src.kind != "sg") throw Elaboration{"sgn_sharp needs a symmetry groupoid source, '" + d.source + "' is " + src.kind};
      if (dst.kind != "sign") throw Elaboration{"sgn_sharp needs a sign() target, '" + d.target + "' is " + dst.kind};
      m = sgn_sharp(src.degree);
      m.source = src.groupoid;
      m.target = dst.groupoid;
    } else if (d.kind == "proj1" || d.kind == "proj2") {
      const int which = d.kind == "proj1" ? 1 : 2;
      if (src.kind != "product" && src.kind != "whitney") {
        throw Elaboration{d.kind + " needs a product or whitney source, '" + d.source + "' is " + src.kind};
      }
      if (src.operands[static_cast<std::size_t>(which - 1)] != d.target) {
        throw Elaboration{d.kind + " of '" + d.source + "' lands in '" + src.operands[static_cast<std::size_t>(which - 1)] +
                          "', not '" + d.target + "'"};
      }
      m = projection(*src.vector, which);
    } else {
      m = table(d, src, dst);
    }
    ws_.morphisms[d.name] = MorphismEntry{std::move(m), d.source, d.target};
  }

  void operator()(const CheckDirective& d) {
    static const std::set<std::string> vector_checks = {"vector", "consequences"};
    if (const auto it = ws_.groupoids.find(d.target); it != ws_.groupoids.end()) {
      if (vector_checks.count(d.check) && !it->second.vector) {
        throw Elaboration{"'" + d.target + "' has no vector structure; cannot run check " + d.check};
      }
      return;
    }
    const auto it = ws_.morphisms.find(d.target);
    if (it == ws_.morphisms.end()) throw Elaboration{"'" + d.target + "' was not built"};
    if (d.check == "vector_morphism") {
      if (!ws_.groupoids.at(it->second.source).vector || !ws_.groupoids.at(it->second.target).vector) {
        throw Elaboration{"vector_morphism needs vector groupoids at both ends"};
      }
    }
  }

 private:
  std::shared_ptr<const VectorGroupoid> vector_operand(const std::string& name) {
    const auto& e = ws_.groupoids.at(name);
    if (!e.vector) throw Elaboration{"'" + name + "' has no vector structure"};
    return e.vector;
  }

  GroupoidMorphism anchor(const MorphismDecl& d, const GroupoidEntry& src, const GroupoidEntry& dst) {
    if (!src.vector) throw Elaboration{"anchor needs a vector groupoid source"};
    AnchorMorphism a = anchor_morphism(*src.vector);
    const auto want = a.target.coordinate_space();
    const auto have = dst.vector ? dst.vector->coordinate_space() : nullptr;
    bool same = have && have->subspace() == want->subspace() && have->size() == want->size();
    const FiniteGroupoid& t = a.target.groupoid();
    for (Index x = 0; same && x < t.size(); ++x) {
      same = t.source(x) == dst.groupoid->source(x) && t.target(x) == dst.groupoid->target(x) &&
             t.inverse(x) == dst.groupoid->inverse(x);
    }
    if (!same) throw Elaboration{"anchor target '" + d.target + "' must be the pair groupoid over the base of '" + d.source + "'"};
    return make_morphism(src.groupoid, dst.groupoid, std::move(a.morphism.map));
  }

  GroupoidMorphism table(const MorphismDecl& d, const GroupoidEntry& src, const GroupoidEntry& dst) {
    if (!src.vector || !dst.vector) throw Elaboration{"table morphisms need coordinate carriers at both ends"};
    const auto cs = src.vector->coordinate_space();
    const auto cd = dst.vector->coordinate_space();
    std::vector<std::int64_t> map(src.groupoid->size(), -1);
    for (const auto& [from, to] : d.table) {
      const auto x = cs->find(to_coords(from, cs->field(), cs->ambient_dim()));
      if (!x) throw Elaboration{render(from) + " is not an element of '" + d.source + "'"};
      const auto y = cd->find(to_coords(to, cd->field(), cd->ambient_dim()));
      if (!y) throw Elaboration{render(to) + " is not an element of '" + d.target + "'"};
      if (map[*x] >= 0) throw Elaboration{"element " + cs->label(*x) + " is mapped twice"};
      map[*x] = *y;
    }
    std::vector<Index> total;
    for (Index x = 0; x < map.size(); ++x) {
      if (map[x] < 0) throw Elaboration{"table does not map element " + cs->label(x)};
      total.push_back(static_cast<Index>(map[x]));
    }
    return make_morphism(src.groupoid, dst.groupoid, std::move(total));
  }

  const EvalOptions& opt_;
  Workspace& ws_;
};

}  // namespace

bool EvalResult::ok() const {
  for (const auto& d : diagnostics) {
    if (d.severity == Diagnostic::Severity::error) return false;
  }
  return true;
}

EvalResult evaluate(const SpecAst& ast, const EvalOptions& options) {
  EvalResult out;
  Evaluator ev(options, out.workspace);
  for (const auto& s : ast.statements) {
    auto fail = [&](std::string message) {
      out.diagnostics.push_back({Diagnostic::Severity::error, std::move(message), s.span.line, s.span.column, ""});
    };
    try {
      std::visit(ev, s.node);
    } catch (const Error& e) {
      fail(std::string(errc_name(e.code())) + ": " + e.what());
      return out;
    } catch (const Elaboration& e) {
      fail(e.message);
      return out;
    } catch (const std::out_of_range&) {
      fail("refers to an object that failed to build");
      return out;
    }
  }
  bool any_check = false;
  for (const auto& s : ast.statements) any_check = any_check || std::holds_alternative<CheckDirective>(s.node);
  if (!any_check) out.diagnostics.push_back({Diagnostic::Severity::warning, "no check directives", 1, 1, ""});
  return out;
}

}  // namespace vg::dsl
