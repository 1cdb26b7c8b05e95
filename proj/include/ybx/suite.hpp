#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ybx {

struct SuiteOptions {
  uint64_t seed = 0;
  bool timings = false;  // timing block is excluded from the determinism contract
};

struct CriterionResult {
  std::string name;    // stable sort key, "01".."14" prefix
  std::string anchor;  // which mathematical claim the criterion exercises
  bool pass = false;
  std::vector<std::string> details;  // deterministic findings / counts
};

struct SuiteReport {
  uint64_t seed = 0;
  bool all_pass = false;
  std::vector<CriterionResult> results;
  std::vector<double> timings_ms;  // parallel to results, only when requested
  bool with_timings = false;

  nlohmann::json to_json() const;
  /// One pass/fail line per criterion plus an overall line.
  std::string render_text() const;
};

/// Runs every acceptance criterion at the given seed. All identity checks are
/// exact (residual must be the zero matrix); sampled parameters follow the
/// documented policy in rng.hpp. Criterion 14 reruns criteria 1-13 and
/// compares serialized bytes.
SuiteReport run_acceptance_suite(const SuiteOptions& opt);

}  // namespace ybx
