#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

namespace diffgraph {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  std::chrono::milliseconds elapsed{0};
  std::chrono::milliseconds budget{0};
};

struct ReproOptions {
  std::size_t workers = 1;
  // Skip the order-40..42 exhaustive searches (criteria 7 and 8 then only
  // check the classification and graph parts).
  bool skip_long_searches = false;
  // Only run these criteria; empty means all.
  std::vector<int> only;
};

/// Runs the reproduction checks 1..11 in order.
std::vector<CriterionResult> run_reproduction(const ReproOptions& options);

/// "PASS  1  <title>  (<ms> ms)  <detail>" lines.
std::string format_ledger(const std::vector<CriterionResult>& results);

}  // namespace diffgraph
