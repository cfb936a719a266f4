#include <chrono>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "vgroupoid/dsl/evaluator.hpp"

namespace vg::dsl {
namespace {

AxiomReport run_one(const Workspace& ws, const CheckDirective& d, const EvalOptions& opt) {
  const std::size_t cap = opt.witness_cap;
  if (const auto it = ws.groupoids.find(d.target); it != ws.groupoids.end()) {
    const GroupoidEntry& e = it->second;
    if (d.check == "brandt") return verify_brandt(*e.groupoid, cap);
    if (d.check == "calculus") return verify_calculus(*e.groupoid, cap);
    if (d.check == "vector") return verify_vector_axioms(*e.vector, cap);
    if (d.check == "consequences") return verify_structural_consequences(*e.vector, cap);
    return transitivity_report(*e.groupoid, cap);
  }
  const MorphismEntry& m = ws.morphisms.at(d.target);
  if (d.check == "morphism") return verify_morphism(m.morphism, cap);
  if (d.check == "homomorphism") return verify_homomorphism(m.morphism, cap);
  return verify_vector_morphism(m.morphism, *ws.groupoids.at(m.source).vector, *ws.groupoids.at(m.target).vector, cap);
}

const char* status(bool passed) { return passed ? "pass" : "fail"; }

}  // namespace

bool RunReport::passed() const {
  for (const auto& d : directives) {
    if (!d.report.passed()) return false;
  }
  return true;
}

RunReport run_checks(const Workspace& ws, const SpecAst& ast, const EvalOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport out;
  out.version = tool_version();
  for (const auto& s : ast.statements) {
    if (const auto* d = std::get_if<CheckDirective>(&s.node)) {
      out.directives.push_back({d->target, d->check, run_one(ws, *d, options)});
    }
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string emit_report(const RunReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["status"] = status(report.passed());
    j["directives"] = nlohmann::ordered_json::array();
    for (const auto& d : report.directives) {
      nlohmann::ordered_json entry;
      entry["target"] = d.target;
      entry["check"] = d.check;
      entry["status"] = status(d.report.passed());
      entry["examined"] = d.report.examined();
      entry["witnesses"] = nlohmann::ordered_json::array();
      for (const auto& law : d.report.laws()) {
        for (const auto& w : law.witnesses) {
          entry["witnesses"].push_back(
              {{"law", w.law}, {"inputs", w.inputs}, {"expected", w.expected}, {"actual", w.actual}});
        }
      }
      j["directives"].push_back(std::move(entry));
    }
    j["version"] = report.version;
    j["input_digest"] = report.input_digest;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  for (const auto& d : report.directives) {
    out << status(d.report.passed()) << "  " << d.target << " " << d.check << "  (" << d.report.examined()
        << " examined)\n";
    for (const auto& law : d.report.laws()) {
      out << "    " << (law.passed() ? "ok  " : "FAIL") << "  " << law.id << "  " << law.examined << " examined";
      if (!law.passed()) out << ", " << law.failures << " failing";
      out << "\n";
      for (const auto& w : law.witnesses) {
        out << "          at";
        for (const auto& in : w.inputs) out << " " << in;
        out << ": expected " << w.expected << ", got " << w.actual << "\n";
      }
    }
    if (!d.report.passed() && !d.report.diagnosis().empty()) out << "    diagnosis: " << d.report.diagnosis() << "\n";
  }
  out << "status: " << status(report.passed()) << " (" << report.directives.size() << " checks)\n";
  return out.str();
}

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string tool_version() { return VGROUPOID_VERSION; }

}  // namespace vg::dsl
