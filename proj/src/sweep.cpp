#include "regset/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "regset/perfect_code.hpp"
#include "regset/regular_sets.hpp"

namespace regset {

bool SweepReport::has_consistency_failure() const {
  for (const auto& p : pairs)
    if (p.consistency_failure) return true;
  return false;
}

namespace {

struct PairTask {
  int group_index;
  int subgroup_index;
  std::vector<int> subgroup_elements;
};

SweepPairResult run_pair(const CatalogEntry& entry, const Subgroup& h, long long budget) {
  const GroupTable& g = entry.table;
  SweepPairResult r;
  r.group_id = entry.id;
  r.group_order = g.order;
  r.subgroup = h.elements();
  r.normal = is_normal(g, h);
  try {
    auto decision = is_perfect_code(g, h);
    r.perfect_code = decision.is_perfect_code;
    r.total_perfect_code = decision.is_total_perfect_code;
    if (r.normal && condition_square_in_H(g, h) != decision.is_perfect_code) {
      r.consistency_failure = true;
      r.failures.push_back("squares condition disagrees with the perfect-code decision");
    }
    if (decision.is_perfect_code) {
      r.grid_applicable = true;
      try {
        auto certs = full_range_construct(g, h, budget);
        r.grid_ok = true;
        r.certificates = static_cast<int>(certs.size());
        std::set<std::string> methods;
        for (const auto& c : certs)
          for (auto m : c.methods_used) methods.insert(bundle_method_name(m));
        r.methods.assign(methods.begin(), methods.end());
      } catch (const Error& e) {
        if (is_budget_error(e.code())) throw;  // budget exhaustion is a hard error
        r.grid_ok = false;
        r.failures.push_back(e.what());
        if (dynamic_cast<const ConsistencyError*>(&e)) r.consistency_failure = true;
      }
    }
  } catch (const ConsistencyError& e) {
    r.consistency_failure = true;
    r.failures.push_back(e.what());
  }
  return r;
}

}  // namespace

SweepReport sweep(const SweepOptions& options) {
  auto entries = catalog(options.max_order, options.catalog_dir);
  SweepReport report;
  report.max_order = options.max_order;
  report.with_timing = options.with_timing;

  // Phase 1: subgroup enumeration per group, sequential and deterministic.
  std::vector<PairTask> tasks;
  report.scope.reserve(entries.size());
  std::map<int, std::set<std::vector<int>>> order_multisets;
  for (int gi = 0; gi < static_cast<int>(entries.size()); ++gi) {
    const auto& entry = entries[gi];
    auto start = std::chrono::steady_clock::now();
    auto subs = enumerate_subgroups(entry.table);
    int si = 0;
    for (const auto& h : subs) {
      if (h.order() > 1 && h.order() < entry.table.order)
        tasks.push_back({gi, si++, h.elements()});
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report.scope.push_back(
        {entry.id, entry.description, entry.table.order, entry.aliases, elapsed});
    order_multisets[entry.table.order].insert(element_order_multiset(entry.table));
  }
  for (const auto& [order, multisets] : order_multisets) {
    int built = 0;
    for (const auto& s : report.scope)
      if (s.order == order) ++built;
    report.coverage.push_back({order, built, static_cast<int>(multisets.size()),
                               known_group_count(order)});
  }

  // Phase 2: pairs in parallel; results land in indexed slots, so the merge
  // order is independent of the thread count.
  std::vector<SweepPairResult> results(tasks.size());
  std::vector<long long> pair_ms(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr worker_error;
  std::mutex error_mutex;
  int thread_count = std::max(1, options.threads);
  auto worker = [&]() {
    try {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        const auto& task = tasks[i];
        const auto& entry = entries[task.group_index];
        auto start = std::chrono::steady_clock::now();
        Subgroup h(entry.table, task.subgroup_elements);
        results[i] = run_pair(entry, h, options.budget);
        pair_ms[i] = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!worker_error) worker_error = std::current_exception();
      next.store(tasks.size());  // stop the other workers
    }
  };
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (worker_error) std::rethrow_exception(worker_error);

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& r = results[i];
    report.total_certificates += r.certificates;
    if ((r.grid_applicable && !r.grid_ok) || r.consistency_failure) {
      std::string what = r.group_id + " H=" + [&] {
        std::string s = "{";
        for (std::size_t j = 0; j < r.subgroup.size(); ++j) {
          if (j) s += ",";
          s += std::to_string(r.subgroup[j]);
        }
        return s + "}";
      }();
      for (const auto& f : r.failures) report.counterexamples.push_back(what + ": " + f);
      if (r.failures.empty()) report.counterexamples.push_back(what + ": grid failed");
    }
    report.pairs.push_back(std::move(r));
  }
  if (options.with_timing) {
    // Attach per-group timing (subgroup enumeration + its pairs).
    std::map<int, long long> per_group;
    for (std::size_t i = 0; i < tasks.size(); ++i)
      per_group[tasks[i].group_index] += pair_ms[i];
    for (int gi = 0; gi < static_cast<int>(report.scope.size()); ++gi)
      report.scope[gi].timing_ms += per_group.count(gi) ? per_group[gi] : 0;
  }
  return report;
}

nlohmann::ordered_json SweepReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["max_order"] = max_order;

  nlohmann::ordered_json scope_json = nlohmann::ordered_json::array();
  for (const auto& s : scope) {
    nlohmann::ordered_json e;
    e["id"] = s.id;
    e["order"] = s.order;
    e["recipe"] = s.description;
    if (!s.aliases.empty()) e["aliases"] = s.aliases;
    if (with_timing) e["timing_ms"] = s.timing_ms;
    scope_json.push_back(std::move(e));
  }
  j["scope"] = std::move(scope_json);

  nlohmann::ordered_json coverage_json = nlohmann::ordered_json::array();
  for (const auto& c : coverage) {
    nlohmann::ordered_json e;
    e["order"] = c.order;
    e["groups_built"] = c.groups_built;
    e["distinct_type_lower_bound"] = c.distinct_type_lower_bound;
    if (c.known_groups > 0) {
      e["known_groups"] = c.known_groups;
      e["all_types_present"] = (c.distinct_type_lower_bound == c.known_groups);
    }
    coverage_json.push_back(std::move(e));
  }
  j["coverage"] = std::move(coverage_json);

  nlohmann::ordered_json pairs_json = nlohmann::ordered_json::array();
  for (const auto& p : pairs) {
    nlohmann::ordered_json e;
    e["group"] = p.group_id;
    e["order"] = p.group_order;
    e["subgroup"] = p.subgroup;
    e["normal"] = p.normal;
    e["perfect_code"] = p.perfect_code;
    e["total_perfect_code"] = p.total_perfect_code;
    if (p.grid_applicable) {
      e["grid_ok"] = p.grid_ok;
      e["certificates"] = p.certificates;
      e["methods"] = p.methods;
    } else {
      e["grid_ok"] = nullptr;
    }
    if (!p.failures.empty()) e["failures"] = p.failures;
    pairs_json.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs_json);
  j["counterexamples"] = counterexamples;
  j["totals"] = {{"groups", scope.size()},
                 {"pairs", pairs.size()},
                 {"certificates", total_certificates}};
  return j;
}

}  // namespace regset
