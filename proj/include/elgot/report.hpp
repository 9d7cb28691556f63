#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace elgot {

struct LawFailure {
  std::string law;
  std::string instance;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one exhaustive (or randomized) law suite.
struct LawReport {
  std::string suite;
  long instances = 0;
  std::vector<LawFailure> failures;
  std::optional<long> elapsed_ms;  // omitted in deterministic output

  bool passed() const { return failures.empty(); }

  /// Records one checked instance; on failure keeps law/instance/lhs/rhs.
  void tally(bool ok, const std::string& law, const std::string& instance,
             const std::string& lhs = "", const std::string& rhs = "") {
    ++instances;
    if (!ok) failures.push_back(LawFailure{law, instance, lhs, rhs});
  }

  void merge(const LawReport& other) {
    instances += other.instances;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

inline nlohmann::ordered_json to_json(const LawReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["instances"] = r.instances;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    j["failures"].push_back({{"law", f.law}, {"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

}  // namespace elgot
