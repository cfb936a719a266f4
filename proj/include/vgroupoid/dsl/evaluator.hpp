#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vgroupoid/dsl/ast.hpp"
#include "vgroupoid/morphism.hpp"

namespace vg::dsl {

struct EvalOptions {
  std::size_t witness_cap = kDefaultWitnessCap;
  std::size_t max_carrier = kDefaultMaxCarrier;
};

struct GroupoidEntry {
  std::string kind;
  std::shared_ptr<const FiniteGroupoid> groupoid;
  std::shared_ptr<const VectorGroupoid> vector;  // null for sg and sign
  std::vector<std::string> operands;
  int degree = 0;
};

struct MorphismEntry {
  GroupoidMorphism morphism;
  std::string source;
  std::string target;
};

/// Every object declared by a definition file, by name.
struct Workspace {
  std::map<std::string, PrimeField> fields;
  std::map<std::string, std::shared_ptr<const CoordinateSpace>> spaces;  // spaces and subspaces
  std::map<std::string, Subspace> subspaces;
  std::map<std::string, GroupoidEntry> groupoids;
  std::map<std::string, MorphismEntry> morphisms;
};

struct EvalResult {
  Workspace workspace;
  std::vector<Diagnostic> diagnostics;
  bool ok() const;
};

/// Builds every declared object in order. Library errors become diagnostics
/// at the declaring statement, named by error code.
EvalResult evaluate(const SpecAst& ast, const EvalOptions& options = {});

struct DirectiveReport {
  std::string target;
  std::string check;
  AxiomReport report;
};

struct RunReport {
  std::vector<DirectiveReport> directives;
  std::string version;
  std::string input_digest;
  double elapsed_ms = 0;

  bool passed() const;
};

/// Runs the check directives in source order.
RunReport run_checks(const Workspace& ws, const SpecAst& ast, const EvalOptions& options = {});

enum class ReportFormat { text, json };

/// Text has one line per law plus witnesses; JSON uses the fields status,
/// directives[{target, check, status, examined, witnesses[{law, inputs,
/// expected, actual}]}], version and input_digest. Timing is left out so the
/// output is byte-stable.
std::string emit_report(const RunReport& report, ReportFormat format);

/// FNV-1a 64-bit hash of the input, as 16 hex digits.
std::string digest(std::string_view text);

/// "library version" string.
std::string tool_version();

}  // namespace vg::dsl
