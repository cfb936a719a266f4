#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vg {

inline constexpr std::size_t kDefaultWitnessCap = 10;

/// One concrete counterexample to a law.
struct Witness {
  std::string law;
  std::vector<std::string> inputs;
  std::string expected;
  std::string actual;
  /// Canonical ordering key: element indices and scalars of the input tuple.
  std::vector<std::int64_t> key;
};

struct LawResult {
  std::string id;
  std::uint64_t examined = 0;
  std::uint64_t failures = 0;
  /// Sorted by key, at most the report's witness cap.
  std::vector<Witness> witnesses;

  bool passed() const noexcept { return witnesses.empty(); }
};

/// Outcome of a verification run: one entry per checked law, each with the
/// number of tuples examined and the first few counterexamples in canonical
/// order.
class AxiomReport {
 public:
  explicit AxiomReport(std::size_t witness_cap = kDefaultWitnessCap);

  std::size_t witness_cap() const noexcept { return cap_; }

  /// Registers a law (idempotent) and returns its record.
  LawResult& law(std::string_view id);

  void examine(std::string_view id, std::uint64_t count = 1) { law(id).examined += count; }
  void fail(std::string_view id, std::vector<std::int64_t> key, std::vector<std::string> inputs,
            std::string expected, std::string actual);

  bool passed() const noexcept;
  std::uint64_t examined() const noexcept;
  const std::vector<LawResult>& laws() const noexcept { return laws_; }
  const LawResult* find(std::string_view id) const noexcept;
  std::vector<std::string> failed_laws() const;

  /// Appends every law of `other`, prefixing ids with `prefix`.
  void merge(const AxiomReport& other, std::string_view prefix = {});

  /// Short free-text classification attached to failing reports.
  const std::string& diagnosis() const noexcept { return diagnosis_; }
  void set_diagnosis(std::string text) { diagnosis_ = std::move(text); }

 private:
  std::size_t cap_;
  std::vector<LawResult> laws_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::string diagnosis_;
};

}  // namespace vg
