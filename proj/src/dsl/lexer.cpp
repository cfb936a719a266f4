#include "vgroupoid/dsl/lexer.hpp"

#include <cctype>

namespace vg::dsl {
namespace {

bool is_keyword(std::string_view word) {
  for (std::string_view k : {"field", "space", "subspace", "groupoid", "morphism", "check"}) {
    if (word == k) return true;
  }
  return false;
}

/// True when the line starting at `i` opens with a statement keyword.
bool starts_statement(std::string_view text, std::size_t i) {
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  std::size_t j = i;
  while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
  return j < text.size() && (text[j] == ' ' || text[j] == '\t') && is_keyword(text.substr(i, j - i));
}

}  // namespace

std::vector<Token> lex(std::string_view text, std::vector<Diagnostic>& diagnostics) {
  std::vector<Token> out;
  int line = 1, column = 1, depth = 0;
  std::size_t i = 0;
  auto push = [&](Token::Kind kind, std::string tok, int col) { out.push_back({kind, std::move(tok), line, col}); };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      // An unclosed bracket must not swallow the next statement.
      if (depth > 0 && starts_statement(text, i + 1)) depth = 0;
      if (depth == 0 && !out.empty() && out.back().kind != Token::Kind::newline) push(Token::Kind::newline, "\n", column);
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++column;
      continue;
    }
    const int start = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      push(Token::Kind::identifier, std::string(text.substr(i, j - i)), start);
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Token::Kind::number, std::string(text.substr(i, j - i)), start);
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Token::Kind::punct, "->", start);
      i += 2;
      column += 2;
      continue;
    }
    switch (c) {
      case '(':
      case '{':
        ++depth;
        [[fallthrough]];
      case ')':
      case '}':
        if ((c == ')' || c == '}') && depth > 0) --depth;
        [[fallthrough]];
      case '=':
      case ',':
      case '^':
      case ':':
        push(Token::Kind::punct, std::string(1, c), start);
        break;
      default:
        diagnostics.push_back({Diagnostic::Severity::error, "unexpected character '" + std::string(1, c) + "'", line,
                               start, std::string(1, c)});
        break;
    }
    ++i;
    ++column;
  }
  if (!out.empty() && out.back().kind != Token::Kind::newline) push(Token::Kind::newline, "\n", column);
  push(Token::Kind::end, "", column);
  return out;
}

}  // namespace vg::dsl
