#pragma once

#include <string_view>
#include <vector>

#include "vgroupoid/dsl/ast.hpp"

namespace vg::dsl {

struct ParseResult {
  SpecAst ast;
  std::vector<Diagnostic> diagnostics;

  bool ok() const;
};

/// Parses a definition file. Besides syntax, enforces declaration before use,
/// no redeclaration, the right kind of identifier in each position, and
/// prime moduli.
ParseResult parse(std::string_view text);

}  // namespace vg::dsl
