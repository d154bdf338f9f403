#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "regset/catalog.hpp"
#include "regset/group.hpp"

namespace regset {

struct SweepOptions {
  int max_order = 24;
  int threads = 1;
  bool with_timing = false;  // timing breaks byte-for-byte report stability
  std::string catalog_dir;
  long long budget = -1;
};

struct SweepPairResult {
  std::string group_id;
  int group_order = 0;
  std::vector<int> subgroup;
  bool normal = false;
  bool perfect_code = false;
  bool total_perfect_code = false;
  bool grid_applicable = false;  // grids run only for perfect-code pairs
  bool grid_ok = false;
  int certificates = 0;
  std::vector<std::string> methods;   // bundle method tags, sorted unique
  std::vector<std::string> failures;  // per-pair failure notes
  bool consistency_failure = false;
};

struct SweepGroupResult {
  std::string id;
  std::string description;
  int order = 0;
  std::vector<std::string> aliases;
  long long timing_ms = 0;
};

// Per-order coverage: how many tables were built, a lower bound on the
// distinct isomorphism types among them (distinct element-order multisets),
// and the known number of groups of that order (0 when out of reference
// range). The bound meeting the known count certifies that every type is
// present; otherwise no completeness claim is made.
struct SweepCoverage {
  int order = 0;
  int groups_built = 0;
  int distinct_type_lower_bound = 0;
  int known_groups = 0;
};

struct SweepReport {
  int max_order = 0;
  bool with_timing = false;
  std::vector<SweepGroupResult> scope;
  std::vector<SweepCoverage> coverage;
  std::vector<SweepPairResult> pairs;
  std::vector<std::string> counterexamples;
  long long total_certificates = 0;

  bool has_consistency_failure() const;
  nlohmann::ordered_json to_json() const;
};

// For every catalog group and every nontrivial proper subgroup: decide
// perfect-code status by both methods, cross-check the squares condition for
// normal subgroups, and construct + verify the full admissible (a,b) grid for
// every perfect-code pair. Deterministic output for any thread count.
SweepReport sweep(const SweepOptions& options);

}  // namespace regset
