#include "vgroupoid/dsl/parser.hpp"

#include <charconv>
#include <map>
#include <set>

#include "vgroupoid/dsl/lexer.hpp"
#include "vgroupoid/field.hpp"

namespace vg::dsl {
namespace {

enum class Category { field, space, subspace, groupoid, morphism };

std::string category_name(Category c) {
  switch (c) {
    case Category::field: return "field";
    case Category::space: return "space";
    case Category::subspace: return "subspace";
    case Category::groupoid: return "groupoid";
    case Category::morphism: return "morphism";
  }
  return "identifier";
}

/// Thrown inside a statement to abandon it; the diagnostic is already recorded.
struct StatementError {};

const std::set<std::string> kGroupoidChecks = {"brandt", "calculus", "vector", "consequences", "transitive"};
const std::set<std::string> kMorphismChecks = {"morphism", "homomorphism", "vector_morphism"};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags) : toks_(std::move(tokens)), diags_(diags) {}

  SpecAst run() {
    SpecAst ast;
    while (peek().kind != Token::Kind::end) {
      if (peek().kind == Token::Kind::newline) {
        ++pos_;
        continue;
      }
      const Token& first = peek();
      try {
        Node node = statement();
        if (peek().kind != Token::Kind::newline) error(peek(), "unexpected '" + peek().text + "' after statement");
        const Token& last = toks_[pos_ - 1];
        Span span{first.line, first.column, last.line, last.column + static_cast<int>(last.text.size())};
        ast.statements.push_back({span, std::move(node)});
      } catch (const StatementError&) {
        // A failed declaration still claims its name, so later uses of it
        // are dropped quietly instead of reported as undeclared.
        const std::size_t at = static_cast<std::size_t>(&first - toks_.data());
        if (first.kind == Token::Kind::identifier && first.text != "check" && at + 2 < toks_.size() &&
            toks_[at + 1].kind == Token::Kind::identifier && !symbols_.contains(toks_[at + 1].text) &&
            (toks_[at + 2].text == "=" || toks_[at + 2].text == ":" || toks_[at + 2].text == "of")) {
          poisoned_.insert(toks_[at + 1].text);
        }
        while (peek().kind != Token::Kind::newline && peek().kind != Token::Kind::end) ++pos_;
      }
    }
    return ast;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void error(const Token& at, std::string message) {
    std::string text = at.kind == Token::Kind::newline ? "" : at.text;
    diags_.push_back({Diagnostic::Severity::error, std::move(message), at.line, at.column, std::move(text)});
    throw StatementError{};
  }

  std::string describe(const Token& t) const {
    if (t.kind == Token::Kind::newline) return "end of line";
    if (t.kind == Token::Kind::end) return "end of file";
    return "'" + t.text + "'";
  }

  const Token& expect_punct(std::string_view p) {
    const Token& t = peek();
    if (t.kind != Token::Kind::punct || t.text != p) error(t, "expected '" + std::string(p) + "', found " + describe(t));
    ++pos_;
    return t;
  }

  bool accept_punct(std::string_view p) {
    if (peek().kind == Token::Kind::punct && peek().text == p) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token& expect_word(std::string_view w) {
    const Token& t = peek();
    if (t.kind != Token::Kind::identifier || t.text != w) error(t, "expected '" + std::string(w) + "', found " + describe(t));
    ++pos_;
    return t;
  }

  const Token& identifier() {
    const Token& t = peek();
    if (t.kind != Token::Kind::identifier) error(t, "expected an identifier, found " + describe(t));
    ++pos_;
    return t;
  }

  std::int64_t number(std::int64_t max = std::int64_t{1} << 31) {
    const Token& t = peek();
    if (t.kind != Token::Kind::number) error(t, "expected a number, found " + describe(t));
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v > max) error(t, "number " + t.text + " is too large");
    ++pos_;
    return v;
  }

  /// Declares a new name, reporting redeclaration.
  std::string declare(const Token& name, Category c) {
    if (const auto it = symbols_.find(name.text); it != symbols_.end()) {
      error(name, "'" + name.text + "' is already declared as a " + category_name(it->second));
    }
    symbols_[name.text] = c;
    poisoned_.erase(name.text);
    return name.text;
  }

  /// Reads an identifier that must already be declared with one of `allowed`.
  std::string use(std::initializer_list<Category> allowed) {
    const Token& t = identifier();
    if (poisoned_.contains(t.text)) throw StatementError{};
    const auto it = symbols_.find(t.text);
    if (it == symbols_.end()) error(t, "undeclared identifier '" + t.text + "'");
    for (Category c : allowed) {
      if (it->second == c) return t.text;
    }
    std::string want;
    for (Category c : allowed) want += (want.empty() ? "" : " or ") + category_name(c);
    error(t, "'" + t.text + "' is a " + category_name(it->second) + ", expected a " + want);
  }

  Literal literal() {
    const Token& t = peek();
    if (t.kind == Token::Kind::number) return Literal{number(std::int64_t{1} << 40), {}, false};
    if (!accept_punct("(")) error(t, "expected a number or '(', found " + describe(t));
    Literal out;
    out.tuple = true;
    out.items.push_back(literal());
    while (accept_punct(",")) out.items.push_back(literal());
    expect_punct(")");
    return out;
  }

  Node statement() {
    const Token& kw = peek();
    if (kw.kind != Token::Kind::identifier) error(kw, "expected a statement keyword, found " + describe(kw));
    ++pos_;
    if (kw.text == "field") return field_decl();
    if (kw.text == "space") return space_decl();
    if (kw.text == "subspace") return subspace_decl();
    if (kw.text == "groupoid") return groupoid_decl();
    if (kw.text == "morphism") return morphism_decl();
    if (kw.text == "check") return check_directive();
    error(kw, "unknown keyword '" + kw.text + "'");
  }

  Node field_decl() {
    const Token& name = identifier();
    expect_punct("=");
    expect_word("Zp");
    expect_punct("(");
    const Token& modulus_tok = peek();
    const std::int64_t p = number();
    if (!is_prime(p)) error(modulus_tok, std::to_string(p) + " is not prime");
    expect_punct(")");
    return FieldDecl{declare(name, Category::field), p};
  }

  Node space_decl() {
    const Token& name = identifier();
    expect_punct("=");
    std::string field = use({Category::field});
    expect_punct("^");
    const Token& dim_tok = peek();
    const std::int64_t dim = number();
    if (dim < 1 || dim > 32) error(dim_tok, "dimension must be between 1 and 32");
    return SpaceDecl{declare(name, Category::space), std::move(field), dim};
  }

  Node subspace_decl() {
    const Token& name = identifier();
    expect_word("of");
    std::string space = use({Category::space});
    expect_punct("=");
    expect_word("span");
    expect_punct("{");
    std::vector<Literal> gens;
    if (!accept_punct("}")) {
      gens.push_back(literal());
      while (accept_punct(",")) gens.push_back(literal());
      expect_punct("}");
    }
    return SubspaceDecl{declare(name, Category::subspace), std::move(space), std::move(gens)};
  }

  Node groupoid_decl() {
    const Token& name = identifier();
    expect_punct("=");
    const Token& kind = identifier();
    GroupoidDecl d;
    d.kind = kind.text;
    expect_punct("(");
    const std::initializer_list<Category> spaces = {Category::space, Category::subspace};
    if (d.kind == "pair" || d.kind == "null" || d.kind == "single_unit" || d.kind == "v3") {
      d.operands.push_back(use(spaces));
    } else if (d.kind == "vpq") {
      d.operands.push_back(use(spaces));
      while (accept_punct(",")) {
        const Token& key = identifier();
        expect_punct("=");
        const std::int64_t value = number();
        if (key.text == "p" && !d.p) {
          d.p = value;
        } else if (key.text == "q" && !d.q) {
          d.q = value;
        } else {
          error(key, "unexpected parameter '" + key.text + "' for vpq");
        }
      }
      if (!d.p || !d.q) error(peek(), "vpq takes a space and both p= and q=");
    } else if (d.kind == "tvg") {
      d.operands.push_back(use(spaces));
      arity_comma(kind, 2);
      d.operands.push_back(use({Category::subspace}));
    } else if (d.kind == "product" || d.kind == "whitney") {
      d.operands.push_back(use({Category::groupoid}));
      arity_comma(kind, 2);
      d.operands.push_back(use({Category::groupoid}));
    } else if (d.kind == "sg") {
      d.degree = number();
    } else if (d.kind == "sign") {
      // no arguments
    } else {
      error(kind, "unknown construction '" + kind.text + "'");
    }
    if (peek().kind == Token::Kind::punct && peek().text == ",") error(peek(), "too many arguments to " + d.kind);
    expect_punct(")");
    d.name = declare(name, Category::groupoid);
    return d;
  }

  void arity_comma(const Token& kind, int arity) {
    if (!accept_punct(",")) {
      error(peek(), kind.text + " takes " + std::to_string(arity) + " arguments, found " + describe(peek()));
    }
  }

  Node morphism_decl() {
    const Token& name = identifier();
    expect_punct(":");
    MorphismDecl d;
    d.source = use({Category::groupoid});
    expect_punct("->");
    d.target = use({Category::groupoid});
    expect_punct("=");
    const Token& kind = identifier();
    d.kind = kind.text;
    if (d.kind == "table") {
      expect_punct("{");
      if (!accept_punct("}")) {
        do {
          Literal from = literal();
          expect_punct("->");
          Literal to = literal();
          d.table.emplace_back(std::move(from), std::move(to));
        } while (accept_punct(","));
        expect_punct("}");
      }
    } else if (d.kind != "anchor" && d.kind != "sgn_sharp" && d.kind != "proj1" && d.kind != "proj2") {
      error(kind, "unknown morphism kind '" + kind.text + "'");
    }
    d.name = declare(name, Category::morphism);
    return d;
  }

  Node check_directive() {
    const Token& target = identifier();
    if (poisoned_.contains(target.text)) throw StatementError{};
    const auto it = symbols_.find(target.text);
    if (it == symbols_.end()) error(target, "undeclared identifier '" + target.text + "'");
    if (it->second != Category::groupoid && it->second != Category::morphism) {
      error(target, "'" + target.text + "' is a " + category_name(it->second) + "; only groupoids and morphisms are checked");
    }
    const Token& check = identifier();
    const auto& allowed = it->second == Category::groupoid ? kGroupoidChecks : kMorphismChecks;
    if (!allowed.count(check.text)) {
      error(check, "unknown check '" + check.text + "' for a " + category_name(it->second));
    }
    return CheckDirective{target.text, check.text};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
  std::map<std::string, Category> symbols_;
  std::set<std::string> poisoned_;
};

}  // namespace

bool ParseResult::ok() const {
  for (const auto& d : diagnostics) {
    if (d.severity == Diagnostic::Severity::error) return false;
  }
  return true;
}

ParseResult parse(std::string_view text) {
  ParseResult out;
  auto tokens = lex(text, out.diagnostics);
  out.ast = Parser(std::move(tokens), out.diagnostics).run();
  return out;
}

}  // namespace vg::dsl
