#include <string>

#include "vgroupoid/dsl/ast.hpp"

namespace vg::dsl {
namespace {

struct Renderer {
  std::string operator()(const FieldDecl& d) const { return "field " + d.name + " = Zp(" + std::to_string(d.modulus) + ")"; }

  std::string operator()(const SpaceDecl& d) const {
    return "space " + d.name + " = " + d.field + "^" + std::to_string(d.dim);
  }

  std::string operator()(const SubspaceDecl& d) const {
    std::string out = "subspace " + d.name + " of " + d.space + " = span{";
    for (std::size_t i = 0; i < d.generators.size(); ++i) out += (i ? ", " : "") + render(d.generators[i]);
    return out + "}";
  }

  std::string operator()(const GroupoidDecl& d) const {
    std::string args;
    for (const auto& o : d.operands) args += (args.empty() ? "" : ", ") + o;
    if (d.p) args += ", p=" + std::to_string(*d.p);
    if (d.q) args += ", q=" + std::to_string(*d.q);
    if (d.degree) args += std::to_string(*d.degree);
    return "groupoid " + d.name + " = " + d.kind + "(" + args + ")";
  }

  std::string operator()(const MorphismDecl& d) const {
    std::string out = "morphism " + d.name + " : " + d.source + " -> " + d.target + " = " + d.kind;
    if (d.kind == "table") {
      out += "{";
      for (std::size_t i = 0; i < d.table.size(); ++i) {
        out += (i ? ", " : "") + render(d.table[i].first) + " -> " + render(d.table[i].second);
      }
      out += "}";
    }
    return out;
  }

  std::string operator()(const CheckDirective& d) const { return "check " + d.target + " " + d.check; }
};

}  // namespace

std::string render(const Literal& literal) {
  if (!literal.tuple) return std::to_string(literal.value);
  std::string out = "(";
  for (std::size_t i = 0; i < literal.items.size(); ++i) out += (i ? "," : "") + render(literal.items[i]);
  return out + ")";
}

std::string render(const SpecAst& ast) {
  std::string out;
  for (const auto& s : ast.statements) out += std::visit(Renderer{}, s.node) + "\n";
  return out;
}

}  // namespace vg::dsl
