#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vgroupoid/dsl/ast.hpp"

namespace vg::dsl {

struct Token {
  enum class Kind { identifier, number, punct, newline, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

/// Splits source text into tokens. Newlines inside parentheses or braces are
/// dropped so calls and tables may span lines; '#' comments run to the end
/// of the line. Unknown characters produce diagnostics and are skipped.
std::vector<Token> lex(std::string_view text, std::vector<Diagnostic>& diagnostics);

}  // namespace vg::dsl
