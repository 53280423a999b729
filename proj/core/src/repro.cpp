#include "diffgraph/repro.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "diffgraph/bigraph.hpp"
#include "diffgraph/diffset.hpp"
#include "diffgraph/fixtures.hpp"
#include "diffgraph/group_spec.hpp"
#include "diffgraph/moore.hpp"
#include "diffgraph/search.hpp"
#include "diffgraph/singer.hpp"

namespace diffgraph {

namespace {

using Clock = std::chrono::steady_clock;
using std::chrono::milliseconds;

// Collects the first few failed checks of one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    if (ok()) return std::to_string(checks_) + " checks";
    std::string out = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed:";
    for (const auto& f : failures_) out += " [" + f + "]";
    return out;
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string set_text(const std::vector<Element>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

bool is_diameter3_graph(const Group& g, const std::vector<Element>& s, std::size_t m, std::size_t workers,
                        std::size_t expect_vertices, std::size_t expect_r, std::size_t expect_s,
                        Checker& c, const std::string& tag) {
  const BiGraph graph = build_gm(g, CandidateSet(g, s), m);
  const auto reg = verify_biregular(graph);
  const auto d = diameter(graph, workers);
  c.expect(graph.vertex_count() == expect_vertices,
           tag + " has " + std::to_string(graph.vertex_count()) + " vertices");
  c.expect(reg.ok && reg.r == expect_r && reg.s == expect_s,
           tag + " degrees (" + std::to_string(reg.r) + "," + std::to_string(reg.s) + ")");
  c.expect(d.diameter == 3, tag + " diameter " + std::to_string(d.diameter));
  return graph.vertex_count() == expect_vertices && reg.ok && d.diameter == 3;
}

void criterion_moore(Checker& c, const ReproOptions&) {
  const TableGrid grid = moore_grid(12, 12);
  for (const auto& cell : fixtures::moore_table()) {
    const auto v = grid.at(cell.r, cell.s);
    c.expect(v && *v == cell.bound, "M(" + std::to_string(cell.r) + "," + std::to_string(cell.s) + ")");
  }
  const std::pair<std::pair<int, int>, std::uint64_t> anchors[] = {
      {{4, 3}, 14}, {{5, 3}, 16}, {{6, 3}, 24}, {{8, 4}, 42}, {{10, 5}, 69}, {{10, 6}, 88}, {{12, 12}, 266}};
  for (const auto& [rs, value] : anchors) {
    const auto v = grid.at(rs.first, rs.second);
    c.expect(v && *v == value, "anchor (" + std::to_string(rs.first) + "," + std::to_string(rs.second) + ")");
  }
}

void criterion_improved(Checker& c, const ReproOptions&) {
  const TableGrid grid = improved_grid(36, 5);
  c.expect(grid.cols == fixtures::improved_table_columns(), "column set");
  std::size_t numeric = 0;
  for (std::size_t i = 0; i < grid.rows.size(); ++i) {
    for (std::size_t j = 0; j < grid.cols.size(); ++j) {
      if (grid.cells[i][j]) ++numeric;
    }
  }
  c.expect(numeric == fixtures::improved_table().size(), "numeric cell count " + std::to_string(numeric));
  for (const auto& cell : fixtures::improved_table()) {
    const auto v = grid.at(cell.s, cell.r);
    c.expect(v && *v == cell.value, "M*(" + std::to_string(cell.r) + "," + std::to_string(cell.s) + ")");
  }
}

void criterion_perfect(Checker& c, const ReproOptions&) {
  for (const auto& p : fixtures::perfect_sets()) {
    const Group g = build_cyclic(p.n);
    const auto cls = classify_set(CandidateSet(g, p.set));
    const std::string want =
        "Perfect(" + std::to_string(p.n) + "," + std::to_string(p.set.size()) + ",1)";
    c.expect(cls.label() == want, "Z_" + std::to_string(p.n) + " " + cls.label());
  }
}

void criterion_singer(Checker& c, const ReproOptions&) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u}) {
    const SingerSet s = singer_set(q);
    const std::size_t n = std::size_t{q} * q + q + 1;
    c.expect(s.set.size() == q + 1 && s.n == n && s.classification.verdict == Verdict::kPerfect,
             "q=" + std::to_string(q) + " " + s.classification.label());
  }
  const SingerSet s3 = singer_set(3, Poly{1, 1, 2, 1});
  c.expect(s3.set == std::vector<Element>{0, 1, 4, 6}, "q=3 with x^3+2x^2+x+1 gives " + set_text(s3.set));
}

void criterion_graphs(Checker& c, const ReproOptions& o) {
  const Group z7 = build_cyclic(7);
  const Group z13 = build_cyclic(13);
  is_diameter3_graph(z7, {0, 1, 3}, 2, o.workers, 21, 6, 3, c, "G_2 Z_7");
  is_diameter3_graph(z13, {0, 1, 3, 9}, 2, o.workers, 39, 8, 4, c, "G_2 Z_13");
  is_diameter3_graph(z7, {0, 1, 3}, 1, o.workers, 14, 3, 3, c, "G_1 Z_7");
}

void criterion_bimoore(Checker& c, const ReproOptions& o) {
  const Group z7 = build_cyclic(7);
  for (std::size_t m : {2u, 3u}) {
    const std::size_t order = 7 * (m + 1);
    const auto bound = improved_bound(m, 3);
    c.expect(bound && bound->value == order,
             "m=" + std::to_string(m) + " improved bound " + std::to_string(bound ? bound->value : 0));
    if (is_diameter3_graph(z7, {0, 1, 3}, m, o.workers, order, 3 * m, 3, c, "G_" + std::to_string(m) + " Z_7") &&
        bound && bound->value == order) {
      c.note("m=" + std::to_string(m) + ": order " + std::to_string(order) + " = bound");
    }
  }
}

milliseconds since(Clock::time_point t) {
  return std::chrono::duration_cast<milliseconds>(Clock::now() - t);
}

const milliseconds kGroupBudget = std::chrono::minutes(15);

void criterion_abelian_search(Checker& c, const ReproOptions& o) {
  SearchConfig cfg;
  cfg.size = 7;
  cfg.workers = o.workers;

  {
    const auto t = Clock::now();
    const Group z39 = build_cyclic(39);
    const auto cls = classify_set(CandidateSet(z39, fixtures::z39_ads()));
    c.expect(cls.label() == "ADS(39,7,1,34)", "Z_39 witness is " + cls.label());
    c.expect(since(t) < milliseconds(1000), "Z_39 witness check over 1 s");
  }

  if (o.skip_long_searches) {
    c.note("order 40-42 searches skipped");
    return;
  }

  {
    const auto t = Clock::now();
    const Group z39 = build_cyclic(39);
    const SearchOutcome out = enumerate_covering_sets(z39, cfg);
    const auto hit = std::find_if(out.found.begin(), out.found.end(),
                                  [](const FoundSet& f) { return f.elements == fixtures::z39_ads(); });
    c.expect(out.exhausted && hit != out.found.end(), "Z_39 search misses the witness");
    c.expect(since(t) < kGroupBudget, "Z_39 over budget");
    c.note("Z_39: " + std::to_string(out.found.size()) + " sets");
  }

  std::vector<GroupSpec> specs = {GroupSpec::cyclic(42), GroupSpec::cyclic(41)};
  for (const auto& s : group_family("abelian40")) specs.push_back(s);
  for (const auto& spec : specs) {
    const auto t = Clock::now();
    const Group g = build_group(spec);
    const SearchOutcome out = enumerate_covering_sets(g, cfg);
    c.expect(out.exhausted && out.found.empty(),
             g.name() + " found " + std::to_string(out.found.size()));
    c.expect(since(t) < kGroupBudget, g.name() + " over budget");
  }
}

void criterion_nonabelian(Checker& c, const ReproOptions& o) {
  const Group gamma = build_semidirect(5, 8, 2);
  {
    const auto t = Clock::now();
    const auto elems = parse_element_list(gamma, fixtures::gamma1_set_words);
    const CandidateSet set(gamma, elems);
    const auto cls = classify_set(set);
    c.expect(cls.label() == "ADS(40,7,1,36)", "Gamma_1 set is " + cls.label());
    c.expect(cls.repeated.size() == 3, "doubled elements " + std::to_string(cls.repeated.size()));
    const auto prof = difference_profile(set);
    std::size_t involutions = 0;
    std::size_t inverse_pairs = 0;
    for (Element x : cls.repeated) {
      c.expect(prof.counts[x] == 2, "element " + format_element(gamma, x) + " is not doubled");
      if (gamma.element_order(x) == 2) {
        ++involutions;
        c.expect(x == parse_element(gamma, "b^4"), "involution is not b^4");
      } else if (std::count(cls.repeated.begin(), cls.repeated.end(), gamma.inv(x)) == 1) {
        ++inverse_pairs;
      }
    }
    c.expect(involutions == 1 && inverse_pairs == 2, "doubled elements are not b^4 plus an inverse pair");
    c.expect(classify_set(inverse_set(set)).covering(), "Gamma_1 inverse set is not covering");
    c.expect(since(t) < milliseconds(1000), "Gamma_1 classification over 1 s");
    is_diameter3_graph(gamma, elems, 2, o.workers, 120, 14, 7, c, "G_2 Gamma_1");
  }

  if (o.skip_long_searches) {
    c.note("order 40-42 searches skipped");
    return;
  }

  SearchConfig cfg;
  cfg.size = 7;
  cfg.workers = o.workers;
  {
    const auto t = Clock::now();
    SearchConfig inv = cfg;
    inv.require_inverse_covering = true;
    const auto r = exists_covering_set(gamma, inv);
    c.expect(r.exists, "Gamma_1 search with inverse covering finds nothing");
    if (r.witness) c.note("Gamma_1 witness " + set_text(r.witness->elements));
    c.expect(since(t) < kGroupBudget, "Gamma_1 search over budget");
  }
  for (const auto& spec : group_family("nonabelian42")) {
    const auto t = Clock::now();
    const Group g = build_group(spec);
    c.expect(!g.abelian() && g.order() == 42, g.name() + " is not a non-Abelian group of order 42");
    const SearchOutcome out = enumerate_covering_sets(g, cfg);
    c.expect(out.exhausted && out.found.empty(), g.name() + " found " + std::to_string(out.found.size()));
    c.expect(since(t) < kGroupBudget, g.name() + " over budget");
  }
}

void criterion_pruning(Checker& c, const ReproOptions& o) {
  std::size_t runs = 0;
  for (std::size_t n = 2; n <= 21; ++n) {
    const Group g = build_cyclic(n);
    for (std::size_t s = 2; s <= std::min<std::size_t>(5, n); ++s) {
      SearchConfig cfg;
      cfg.size = s;
      cfg.workers = o.workers;
      const auto pruned = enumerate_covering_sets(g, cfg);
      cfg.prune = false;
      const auto plain = enumerate_covering_sets(g, cfg);
      std::vector<std::vector<Element>> a, b;
      for (const auto& f : pruned.found) a.push_back(f.elements);
      for (const auto& f : plain.found) b.push_back(f.elements);
      c.expect(a == b, "Z_" + std::to_string(n) + " s=" + std::to_string(s));
      ++runs;
    }
  }
  c.note(std::to_string(runs) + " (n, s) pairs");
}

void criterion_diameter(Checker& c, const ReproOptions&) {
  std::size_t graphs = 0;
  for (std::size_t n = 2; n <= 13; ++n) {
    const Group g = build_cyclic(n);
    for (std::size_t s = 1; s <= std::min<std::size_t>(4, n - 1); ++s) {
      // all s-subsets of Z_n containing 0
      std::vector<Element> rest(s - 1);
      std::function<void(std::size_t, Element)> rec = [&](std::size_t depth, Element from) {
        if (depth == s - 1) {
          std::vector<Element> set = {0};
          set.insert(set.end(), rest.begin(), rest.end());
          const CandidateSet cs(g, set);
          const bool covering = classify_set(cs).covering();
          for (std::size_t m : {1u, 2u}) {
            const auto d = diameter(build_gm(g, cs, m));
            c.expect((d.diameter == 3) == covering,
                     "Z_" + std::to_string(n) + " " + set_text(set) + " m=" + std::to_string(m));
            ++graphs;
          }
          return;
        }
        for (Element x = from; x < n; ++x) {
          rest[depth] = x;
          rec(depth + 1, x + 1);
        }
      };
      rec(0, 1);
    }
  }
  c.note(std::to_string(graphs) + " graphs");
}

void criterion_involution_law(Checker& c, const ReproOptions& o) {
  const Group z6 = build_cyclic(6);
  SearchConfig cfg;
  cfg.size = 3;
  cfg.workers = o.workers;
  const auto out = enumerate_covering_sets(z6, cfg);
  c.expect(!out.found.empty(), "no covering 3-set in Z_6");
  for (const auto& f : out.found) {
    c.expect(satisfies_involution_law(z6, f.classification) && f.classification.repeated.front() == 3,
             set_text(f.elements));
  }
  c.note(std::to_string(out.found.size()) + " sets");
}

struct Criterion {
  int id;
  const char* title;
  milliseconds budget;
  void (*run)(Checker&, const ReproOptions&);
};

const Criterion kCriteria[] = {
    {1, "Moore table, d = 3", milliseconds(1000), criterion_moore},
    {2, "improved bound table", milliseconds(1000), criterion_improved},
    {3, "perfect difference set table", milliseconds(1000), criterion_perfect},
    {4, "Singer sets", milliseconds(5000), criterion_singer},
    {5, "small G_m graphs", milliseconds(5000), criterion_graphs},
    {6, "biMoore graphs for s = 3", milliseconds(1000), criterion_bimoore},
    {7, "Abelian covering 7-set search", std::chrono::minutes(90), criterion_abelian_search},
    {8, "non-Abelian covering 7-set search", std::chrono::minutes(90), criterion_nonabelian},
    {9, "pruned vs unpruned search", std::chrono::minutes(2), criterion_pruning},
    {10, "diameter 3 iff covering", std::chrono::minutes(2), criterion_diameter},
    {11, "single doubled involution in Z_6", milliseconds(1000), criterion_involution_law},
};

}  // namespace

std::vector<CriterionResult> run_reproduction(const ReproOptions& options) {
  for (int id : options.only) {
    if (std::none_of(std::begin(kCriteria), std::end(kCriteria), [&](const auto& c) { return c.id == id; })) {
      throw_invalid("no criterion with id " + std::to_string(id));
    }
  }
  std::vector<CriterionResult> out;
  for (const auto& crit : kCriteria) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), crit.id) == options.only.end()) {
      continue;
    }
    CriterionResult r;
    r.id = crit.id;
    r.title = crit.title;
    r.budget = crit.budget;
    Checker c;
    const auto t = Clock::now();
    try {
      crit.run(c, options);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    r.elapsed = since(t);
    c.expect(r.elapsed <= r.budget, "over the time budget");
    r.pass = c.ok();
    r.detail = c.summary();
    for (const auto& n : c.notes()) r.detail += "; " + n;
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_ledger(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  (" << r.elapsed.count()
        << " ms)  " << r.detail << '\n';
  }
  return out.str();
}

}  // namespace diffgraph
