#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diffgraph/diffset.hpp"
#include "diffgraph/group.hpp"
#include "diffgraph/group_spec.hpp"

namespace diffgraph {

struct SearchProgress {
  std::size_t partitions_total = 0;
  std::size_t partitions_done = 0;
  // Largest first element t such that every partition up to t has finished.
  std::size_t completed_through = 0;
  std::size_t found = 0;
};

/// Exhaustive covering-set search over canonical candidates {identity} + T,
/// T an (s-1)-subset of the non-identity elements in lexicographic order.
///
/// Work is split by the first element of T; each of those partitions is
/// independent and results are merged in partition order, so the output does
/// not depend on the worker count.
struct SearchConfig {
  GroupSpec group = GroupSpec::cyclic(1);
  std::size_t size = 0;
  bool require_inverse_covering = false;
  std::optional<std::size_t> limit;
  bool prune = true;
  std::size_t workers = 1;
  // Call `progress` after every report_interval finished partitions (0: never).
  std::size_t report_interval = 0;
  std::function<void(const SearchProgress&)> progress;
  // Skip partitions whose first element is below this value.
  std::size_t resume_from = 0;
};

struct FoundSet {
  std::vector<Element> elements;
  SetClassification classification;
  std::optional<SetClassification> inverse_classification;
};

struct SearchOutcome {
  std::vector<FoundSet> found;
  std::uint64_t candidates_examined = 0;  // partial or complete sets visited
  std::uint64_t candidates_pruned = 0;    // partial sets cut by the excess budget
  std::uint64_t complete_sets = 0;        // s-sets reached
  bool exhausted = false;
  std::size_t partitions_total = 0;
  std::size_t completed_through = 0;
  std::int64_t slack = 0;  // s(s-1) - (n-1)
  std::chrono::nanoseconds wall_time{0};
};

SearchOutcome enumerate_covering_sets(const Group& group, const SearchConfig& config);
SearchOutcome enumerate_covering_sets(const SearchConfig& config);

struct ExistsResult {
  bool exists = false;
  std::optional<FoundSet> witness;  // lexicographically least canonical set
  SearchOutcome outcome;
};

ExistsResult exists_covering_set(const Group& group, const SearchConfig& config);
ExistsResult exists_covering_set(const SearchConfig& config);

struct SweepEntry {
  std::string spec;
  std::string group_name;
  std::size_t order = 0;
  bool abelian = false;
  std::optional<ExistsResult> result;
  std::string error;  // set when building or searching the group failed
};

/// exists_covering_set per group; failures are recorded and the sweep goes on.
std::vector<SweepEntry> sweep_family(const std::vector<GroupSpec>& specs, const SearchConfig& config);

/// The single-doubled-involution law for n = s^2 - s: exactly one non-identity
/// element is repeated, exactly twice, and it has order 2.
bool satisfies_involution_law(const Group& group, const SetClassification& c);

}  // namespace diffgraph
