#include "diffgraph/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace diffgraph {

namespace {

struct PartitionResult {
  std::vector<std::vector<Element>> sets;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::uint64_t complete = 0;
  bool capped = false;  // stopped early after reaching the per-partition cap
  bool done = false;
  bool skipped = false;
};

// Depth-first enumeration of {0, first, t_2 < ... < t_{s-1}} for one value of
// `first`. Each added element x contributes x*y^-1 and y*x^-1 for every y
// already chosen.
class PartitionSearch {
 public:
  PartitionSearch(const Group& group, const SearchConfig& config, std::size_t cap)
      : group_(group),
        config_(config),
        cap_(cap),
        n_(group.order()),
        s_(config.size),
        slack_(static_cast<std::int64_t>(s_ * (s_ - 1)) - static_cast<std::int64_t>(n_ - 1)),
        counts_(n_, 0) {
    chosen_.reserve(s_);
  }

  PartitionResult run(Element first) {
    result_ = PartitionResult{};
    std::fill(counts_.begin(), counts_.end(), 0);
    chosen_.assign(1, kIdentity);
    counts_[kIdentity] = 1;
    excess_ = 0;
    distinct_ = 0;
    descend(first);
    result_.done = true;
    return std::move(result_);
  }

 private:
  // Returns false once the partition cap is hit.
  bool descend(Element x) {
    ++result_.examined;
    const std::int64_t saved_excess = excess_;
    const std::size_t saved_distinct = distinct_;
    add(x);
    bool keep_going = true;
    if (config_.prune && excess_ > slack_) {
      ++result_.pruned;
    } else if (chosen_.size() == s_) {
      ++result_.complete;
      if (distinct_ == n_ - 1 && accept()) {
        result_.sets.push_back(chosen_);
        if (result_.sets.size() >= cap_) {
          result_.capped = true;
          keep_going = false;
        }
      }
    } else {
      const std::size_t remaining = s_ - chosen_.size();
      const Element last = static_cast<Element>(n_ - remaining);
      for (Element y = x + 1; y <= last && keep_going; ++y) keep_going = descend(y);
    }
    remove(x);
    excess_ = saved_excess;
    distinct_ = saved_distinct;
    return keep_going;
  }

  void bump(Element g) {
    if (counts_[g]++ == 0) {
      ++distinct_;
    } else {
      ++excess_;
    }
  }

  void add(Element x) {
    const Element xinv = group_.inv(x);
    for (Element y : chosen_) {
      bump(group_.mul(x, group_.inv(y)));
      bump(group_.mul(y, xinv));
    }
    chosen_.push_back(x);
    ++counts_[kIdentity];
  }

  void remove(Element x) {
    chosen_.pop_back();
    --counts_[kIdentity];
    const Element xinv = group_.inv(x);
    for (Element y : chosen_) {
      --counts_[group_.mul(x, group_.inv(y))];
      --counts_[group_.mul(y, xinv)];
    }
  }

  bool accept() const {
    if (!config_.require_inverse_covering) return true;
    CandidateSet inv = inverse_set(CandidateSet(group_, chosen_));
    return classify_set(inv).covering();
  }

  const Group& group_;
  const SearchConfig& config_;
  std::size_t cap_;
  std::size_t n_;
  std::size_t s_;
  std::int64_t slack_;
  std::vector<std::uint32_t> counts_;
  std::vector<Element> chosen_;
  std::int64_t excess_ = 0;
  std::size_t distinct_ = 0;
  PartitionResult result_;
};

void check_config(const Group& group, const SearchConfig& config) {
  if (config.size < 2) throw_invalid("search size must be at least 2");
  if (config.size > group.order()) {
    throw_invalid("search size " + std::to_string(config.size) + " exceeds group order " +
                  std::to_string(group.order()));
  }
  if (config.limit && *config.limit == 0) throw_invalid("limit must be at least 1");
  if (config.workers == 0) throw_invalid("worker count must be positive");
}

FoundSet make_found(const Group& group, const std::vector<Element>& elements, bool with_inverse) {
  CandidateSet set(group, elements);
  FoundSet f;
  f.elements = elements;
  f.classification = classify_set(set);
  if (!f.classification.covering()) throw_internal("search reported a non-covering set");
  if (with_inverse) f.inverse_classification = classify_set(inverse_set(set));
  return f;
}

}  // namespace

SearchOutcome enumerate_covering_sets(const Group& group, const SearchConfig& config) {
  check_config(group, config);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = group.order();
  const std::size_t s = config.size;
  const std::size_t cap = config.limit.value_or(std::numeric_limits<std::size_t>::max());

  SearchOutcome out;
  out.slack = static_cast<std::int64_t>(s * (s - 1)) - static_cast<std::int64_t>(n - 1);

  // Partition p holds the sets whose first non-identity element is p; p runs
  // over 1..n-s+1.
  const std::size_t last_first = n - s + 1;
  out.partitions_total = last_first;
  std::vector<PartitionResult> parts(last_first + 1);
  const std::size_t begin = std::max<std::size_t>(1, config.resume_from);

  std::mutex mu;
  std::atomic<std::size_t> next{begin};
  // Partitions above this value cannot contribute to the first `cap` results.
  std::atomic<std::size_t> stop_after{last_first};
  std::size_t finished = 0;
  std::size_t since_report = 0;

  auto completed_prefix = [&]() {
    std::size_t p = begin;
    while (p <= last_first && parts[p].done) ++p;
    return p - 1;
  };

  auto worker = [&]() {
    PartitionSearch search(group, config, cap);
    for (;;) {
      const std::size_t p = next.fetch_add(1);
      if (p > last_first) return;
      PartitionResult r;
      if (p > stop_after.load()) {
        r.skipped = true;
        r.done = true;
      } else {
        r = search.run(static_cast<Element>(p));
      }
      std::lock_guard lock(mu);
      parts[p] = std::move(r);
      ++finished;
      if (config.limit) {
        std::size_t total = 0;
        for (std::size_t q = begin; q <= last_first; ++q) {
          if (!parts[q].done || parts[q].skipped) continue;
          total += parts[q].sets.size();
          if (total >= cap) {
            if (q < stop_after.load()) stop_after.store(q);
            break;
          }
        }
      }
      if (config.progress && config.report_interval > 0 && ++since_report >= config.report_interval) {
        since_report = 0;
        SearchProgress prog;
        prog.partitions_total = last_first;
        prog.partitions_done = finished;
        prog.completed_through = completed_prefix();
        for (std::size_t q = begin; q <= last_first; ++q) prog.found += parts[q].sets.size();
        config.progress(prog);
      }
    }
  };

  const std::size_t workers = std::min(config.workers, std::max<std::size_t>(1, last_first));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Work past the final cut depends on scheduling, so it is not reported.
  const std::size_t cut = stop_after.load();
  bool complete = begin <= 1 && cut == last_first;
  for (std::size_t p = begin; p <= cut; ++p) {
    const auto& r = parts[p];
    out.candidates_examined += r.examined;
    out.candidates_pruned += r.pruned;
    out.complete_sets += r.complete;
    if (r.skipped || r.capped) complete = false;
    for (const auto& set : r.sets) {
      if (out.found.size() >= cap) {
        complete = false;
        break;
      }
      out.found.push_back(make_found(group, set, config.require_inverse_covering));
    }
  }
  out.completed_through = std::min(completed_prefix(), cut);
  out.exhausted = complete;
  out.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

SearchOutcome enumerate_covering_sets(const SearchConfig& config) {
  return enumerate_covering_sets(build_group(config.group), config);
}

ExistsResult exists_covering_set(const Group& group, const SearchConfig& config) {
  SearchConfig c = config;
  c.limit = 1;
  ExistsResult r;
  r.outcome = enumerate_covering_sets(group, c);
  r.exists = !r.outcome.found.empty();
  if (r.exists) r.witness = r.outcome.found.front();
  return r;
}

ExistsResult exists_covering_set(const SearchConfig& config) {
  return exists_covering_set(build_group(config.group), config);
}

std::vector<SweepEntry> sweep_family(const std::vector<GroupSpec>& specs, const SearchConfig& config) {
  if (specs.empty()) throw_invalid("sweep needs at least one group");
  std::vector<SweepEntry> out;
  for (const auto& spec : specs) {
    SweepEntry e;
    e.spec = to_string(spec);
    try {
      const Group g = build_group(spec);
      e.group_name = g.name();
      e.order = g.order();
      e.abelian = g.abelian();
      e.result = exists_covering_set(g, config);
    } catch (const Error& err) {
      e.error = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool satisfies_involution_law(const Group& group, const SetClassification& c) {
  if (!c.covering() || c.repeated.size() != 1) return false;
  const Element g = c.repeated.front();
  auto it = c.histogram.find(2);
  if (it == c.histogram.end() || it->second != 1) return false;
  return group.element_order(g) == 2;
}

}  // namespace diffgraph
