#include "vgroupoid/report.hpp"

#include <algorithm>

namespace vg {

AxiomReport::AxiomReport(std::size_t witness_cap) : cap_(std::max<std::size_t>(witness_cap, 1)) {}

LawResult& AxiomReport::law(std::string_view id) {
  if (const auto it = index_.find(id); it != index_.end()) return laws_[it->second];
  LawResult fresh;
  fresh.id = std::string(id);
  index_.emplace(fresh.id, laws_.size());
  laws_.push_back(std::move(fresh));
  return laws_.back();
}

void AxiomReport::fail(std::string_view id, std::vector<std::int64_t> key, std::vector<std::string> inputs,
                       std::string expected, std::string actual) {
  LawResult& l = law(id);
  auto pos = std::upper_bound(l.witnesses.begin(), l.witnesses.end(), key,
                              [](const std::vector<std::int64_t>& k, const Witness& w) { return k < w.key; });
  // Identical keys are the same tuple seen twice (e.g. pinned and swept).
  if (pos != l.witnesses.begin() && std::prev(pos)->key == key) return;
  ++l.failures;
  if (l.witnesses.size() >= cap_ && pos == l.witnesses.end()) return;
  l.witnesses.insert(pos, Witness{l.id, std::move(inputs), std::move(expected), std::move(actual), std::move(key)});
  if (l.witnesses.size() > cap_) l.witnesses.pop_back();
}

bool AxiomReport::passed() const noexcept {
  return std::all_of(laws_.begin(), laws_.end(), [](const LawResult& l) { return l.passed(); });
}

std::uint64_t AxiomReport::examined() const noexcept {
  std::uint64_t n = 0;
  for (const auto& l : laws_) n += l.examined;
  return n;
}

const LawResult* AxiomReport::find(std::string_view id) const noexcept {
  const auto it = index_.find(id);
  return it == index_.end() ? nullptr : &laws_[it->second];
}

std::vector<std::string> AxiomReport::failed_laws() const {
  std::vector<std::string> out;
  for (const auto& l : laws_) {
    if (!l.passed()) out.push_back(l.id);
  }
  return out;
}

void AxiomReport::merge(const AxiomReport& other, std::string_view prefix) {
  for (const auto& l : other.laws_) {
    const std::string id = std::string(prefix) + l.id;
    LawResult& into = law(id);
    into.examined += l.examined;
    into.failures += l.failures;
    for (Witness w : l.witnesses) {
      w.law = id;
      into.witnesses.push_back(std::move(w));
    }
    std::stable_sort(into.witnesses.begin(), into.witnesses.end(),
                     [](const Witness& a, const Witness& b) { return a.key < b.key; });
    if (into.witnesses.size() > cap_) into.witnesses.resize(cap_);
  }
  if (diagnosis_.empty()) diagnosis_ = other.diagnosis_;
}

}  // namespace vg
