// vgcheck: verify groupoid definition files.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vgroupoid/constructions.hpp"
#include "vgroupoid/dsl/evaluator.hpp"
#include "vgroupoid/dsl/parser.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

void print(const std::string& file, const vg::dsl::Diagnostic& d) {
  const char* sev = d.severity == vg::dsl::Diagnostic::Severity::error ? "error" : "warning";
  std::cerr << file << ":" << d.line << ":" << d.column << ": " << sev << ": " << d.message;
  if (!d.token.empty()) std::cerr << " [" << d.token << "]";
  std::cerr << "\n";
}

int verify(const std::string& file, bool json, std::optional<std::size_t> cap_flag, std::size_t max_carrier) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cerr << file << ": cannot open\n";
    return kExitInput;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  vg::dsl::EvalOptions opt;
  opt.max_carrier = max_carrier;
  if (cap_flag) {
    opt.witness_cap = *cap_flag;
  } else if (const char* env = std::getenv("VGCHECK_WITNESS_CAP")) {
    try {
      opt.witness_cap = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring VGCHECK_WITNESS_CAP=" << env << "\n";
    }
  }

  const auto parsed = vg::dsl::parse(text);
  for (const auto& d : parsed.diagnostics) print(file, d);
  if (!parsed.ok()) return kExitInput;
  const auto evaluated = vg::dsl::evaluate(parsed.ast, opt);
  for (const auto& d : evaluated.diagnostics) print(file, d);
  if (!evaluated.ok()) return kExitInput;

  auto report = vg::dsl::run_checks(evaluated.workspace, parsed.ast, opt);
  report.input_digest = vg::dsl::digest(text);
  std::cout << vg::dsl::emit_report(report, json ? vg::dsl::ReportFormat::json : vg::dsl::ReportFormat::text);
  if (!json) std::cerr << "checked in " << static_cast<long>(report.elapsed_ms + 0.5) << " ms\n";
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify Brandt and vector groupoids over prime fields"};
  app.set_version_flag("--version", vg::dsl::tool_version());
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::size_t cap = vg::kDefaultWitnessCap;
  std::size_t max_carrier = vg::kDefaultMaxCarrier;
  auto* verify_cmd = app.add_subcommand("verify", "Parse, build and check a definition file");
  verify_cmd->add_option("file", file, "Definition file (.gd)")->required();
  verify_cmd->add_flag("--json", json, "Emit the report as JSON");
  auto* cap_opt = verify_cmd->add_option("--witness-cap", cap, "Counterexamples kept per law (env VGCHECK_WITNESS_CAP)");
  verify_cmd->add_option("--max-carrier", max_carrier, "Largest carrier any construction may build");

  auto* catalog_cmd = app.add_subcommand("catalog", "Construction catalog");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List construction kinds");

  int degree = 0;
  auto* card_cmd = app.add_subcommand("sg-card", "Sizes of the symmetry groupoid and its unit set");
  card_cmd->add_option("n", degree, "Degree")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_cmd->parsed()) {
      return verify(file, json, cap_opt->count() ? std::optional<std::size_t>(cap) : std::nullopt, max_carrier);
    }
    if (list_cmd->parsed()) {
      for (const auto& e : vg::catalog()) std::cout << e.name << "\t" << e.signature << "\t" << e.summary << "\n";
      return kExitPass;
    }
    if (card_cmd->parsed()) {
      const auto [total, units] = vg::sg_cardinality(degree);
      std::cout << total << " " << units << "\n";
      return kExitPass;
    }
  } catch (const vg::Error& e) {
    std::cerr << vg::errc_name(e.code()) << ": " << e.what() << "\n";
    return kExitInput;
  }
  return kExitPass;
}
