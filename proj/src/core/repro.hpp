#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ghcloud {

inline constexpr uint64_t kDefaultReproSeed = 20211013;

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

// Runs the full battery of end-to-end checks: solver identities against
// random instances, the exact number-theory grids, window scans, and the
// chain-limit construction. Deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance_suite(uint64_t seed = kDefaultReproSeed);

nlohmann::json acceptance_report_json(const std::vector<CriterionResult>& results);

}  // namespace ghcloud
