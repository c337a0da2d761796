#pragma once

#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "covplan/generate.hpp"
#include "covplan/search.hpp"

namespace covplan {

struct BenchResult {
  std::string name;
  std::size_t size = 0;
  Verdict verdict = Verdict::timeout;
  double seconds = 0.0;
  std::size_t plan_length = 0;
  bool plan_valid = false;
};

struct BenchRow {
  std::size_t size = 0;
  std::size_t yes = 0, no = 0, timeout = 0;
  double yes_mean_s = 0.0, no_mean_s = 0.0;
};

/// Solves coverage on every suite entry with a per-instance wall budget and
/// validates every returned plan. Results keep manifest order.
inline std::vector<BenchResult> run_suite(const std::vector<SuiteEntry>& entries,
                                          double timeout_seconds) {
  std::vector<BenchResult> results;
  for (const auto& e : entries) {
    BenchResult r;
    r.name = e.graph.name;
    r.size = e.size;
    Budget budget;
    budget.wall_seconds = timeout_seconds;
    auto out = solve_coverage(e.graph, e.n, std::nullopt, budget);
    r.verdict = out.verdict;
    r.seconds = out.stats.millis / 1000.0;
    if (out.plan) {
      r.plan_length = out.plan->length();
      r.plan_valid = static_cast<bool>(validate_plan(e.graph, *out.plan, PlanGoal::cover()));
    }
    results.push_back(std::move(r));
  }
  return results;
}

inline std::vector<BenchRow> aggregate(const std::vector<BenchResult>& results) {
  std::map<std::size_t, BenchRow> by_size;
  std::map<std::size_t, double> yes_total, no_total;
  for (const auto& r : results) {
    auto& row = by_size[r.size];
    row.size = r.size;
    switch (r.verdict) {
      case Verdict::solvable:
        ++row.yes;
        yes_total[r.size] += r.seconds;
        break;
      case Verdict::unsolvable:
        ++row.no;
        no_total[r.size] += r.seconds;
        break;
      case Verdict::timeout:
        ++row.timeout;
        break;
    }
  }
  std::vector<BenchRow> rows;
  for (auto& [size, row] : by_size) {
    if (row.yes) row.yes_mean_s = yes_total[size] / static_cast<double>(row.yes);
    if (row.no) row.no_mean_s = no_total[size] / static_cast<double>(row.no);
    rows.push_back(row);
  }
  return rows;
}

/// The companion table shape: per size, yes count with mean time, no count
/// with mean time, timeout count.
inline std::string format_table(const std::vector<BenchRow>& rows) {
  std::ostringstream s;
  s << std::left << std::setw(6) << "|V|" << std::setw(16) << "yes" << std::setw(16) << "no"
    << std::setw(6) << "To" << "\n";
  for (const auto& row : rows) {
    std::ostringstream yes, no;
    yes << row.yes;
    if (row.yes) yes << " (" << std::fixed << std::setprecision(2) << row.yes_mean_s << " s)";
    no << row.no;
    if (row.no) no << " (" << std::fixed << std::setprecision(2) << row.no_mean_s << " s)";
    s << std::left << std::setw(6) << row.size << std::setw(16) << yes.str() << std::setw(16)
      << no.str() << std::setw(6) << row.timeout << "\n";
  }
  return s.str();
}

inline nlohmann::ordered_json bench_report_json(const std::vector<BenchResult>& results,
                                                const std::vector<BenchRow>& rows) {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json e;
    e["name"] = r.name;
    e["size"] = r.size;
    e["verdict"] = to_string(r.verdict);
    e["seconds"] = r.seconds;
    if (r.verdict == Verdict::solvable) {
      e["plan_length"] = r.plan_length;
      e["plan_valid"] = r.plan_valid;
    }
    arr.push_back(std::move(e));
  }
  j["instances"] = std::move(arr);
  auto tab = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json e;
    e["size"] = row.size;
    e["yes"] = row.yes;
    e["yes_mean_s"] = row.yes_mean_s;
    e["no"] = row.no;
    e["no_mean_s"] = row.no_mean_s;
    e["timeout"] = row.timeout;
    tab.push_back(std::move(e));
  }
  j["table"] = std::move(tab);
  return j;
}

}  // namespace covplan
