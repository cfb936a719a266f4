#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace vg::dsl {

/// 1-based source position range of a statement.
struct Span {
  int line = 1;
  int column = 1;
  int end_line = 1;
  int end_column = 1;
};

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string message;
  int line = 1;
  int column = 1;
  std::string token;
};

/// A residue or a parenthesized tuple of literals, e.g. 2 or ((1,0),(0,1)).
struct Literal {
  std::int64_t value = 0;
  std::vector<Literal> items;
  bool tuple = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct FieldDecl {
  std::string name;
  std::int64_t modulus = 2;
  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct SpaceDecl {
  std::string name;
  std::string field;
  std::int64_t dim = 1;
  friend bool operator==(const SpaceDecl&, const SpaceDecl&) = default;
};

struct SubspaceDecl {
  std::string name;
  std::string space;
  std::vector<Literal> generators;
  friend bool operator==(const SubspaceDecl&, const SubspaceDecl&) = default;
};

/// kind is one of pair, null, single_unit, vpq, v3, tvg, product, whitney, sg, sign.
struct GroupoidDecl {
  std::string name;
  std::string kind;
  std::vector<std::string> operands;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> degree;
  friend bool operator==(const GroupoidDecl&, const GroupoidDecl&) = default;
};

/// kind is one of anchor, sgn_sharp, proj1, proj2, table.
struct MorphismDecl {
  std::string name;
  std::string source;
  std::string target;
  std::string kind;
  std::vector<std::pair<Literal, Literal>> table;
  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

struct CheckDirective {
  std::string target;
  std::string check;
  friend bool operator==(const CheckDirective&, const CheckDirective&) = default;
};

using Node = std::variant<FieldDecl, SpaceDecl, SubspaceDecl, GroupoidDecl, MorphismDecl, CheckDirective>;

struct Statement {
  Span span;
  Node node;
  /// Structural equality; spans are ignored.
  friend bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }
};

struct SpecAst {
  std::vector<Statement> statements;
  friend bool operator==(const SpecAst&, const SpecAst&) = default;
};

std::string render(const Literal& literal);
/// Canonical source text; parse(render(ast)) is structurally equal to ast.
std::string render(const SpecAst& ast);

}  // namespace vg::dsl
