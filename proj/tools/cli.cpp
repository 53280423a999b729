#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "diffgraph/bigraph.hpp"
#include "diffgraph/diffset.hpp"
#include "diffgraph/error.hpp"
#include "diffgraph/group_spec.hpp"
#include "diffgraph/moore.hpp"
#include "diffgraph/repro.hpp"
#include "diffgraph/search.hpp"
#include "diffgraph/singer.hpp"
#include "json.hpp"

namespace diffgraph::cli {

namespace {

using Json = nlohmann::ordered_json;

std::size_t default_workers() {
  if (const char* env = std::getenv("DIFFGRAPH_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_invalid("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_invalid("cannot write " + path);
  out << text;
}

std::string set_text(const Group& g, std::span<const Element> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + format_element(g, s[i]);
  return out + "}";
}

Json elements_json(std::span<const Element> s) { return Json(std::vector<Element>(s.begin(), s.end())); }

Json words_json(const Group& g, std::span<const Element> s) {
  auto arr = Json::array();
  for (Element x : s) arr.push_back(format_element(g, x));
  return arr;
}

bool has_words(const Group& g) { return g.generators().count('b') > 0; }

Json histogram_json(const std::map<std::uint32_t, std::size_t>& h) {
  auto arr = Json::array();
  for (auto [mult, count] : h) arr.push_back({{"multiplicity", mult}, {"count", count}});
  return arr;
}

Json classification_json(const SetClassification& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["label"] = c.label();
  j["n"] = c.n;
  j["s"] = c.s;
  j["lambda"] = c.lambda;
  if (c.verdict == Verdict::kAlmost) {
    j["t"] = c.t;
  } else {
    j["t"] = nullptr;
  }
  j["missing"] = c.missing;
  j["repeated"] = c.repeated;
  j["histogram"] = histogram_json(c.histogram);
  return j;
}

std::string histogram_text(const std::map<std::uint32_t, std::size_t>& h) {
  std::string out;
  for (auto [mult, count] : h) {
    if (!out.empty()) out += ", ";
    out += std::to_string(count) + " x" + std::to_string(mult);
  }
  return out;
}

Group group_from(const std::string& spec) { return build_group(parse_group_spec(spec)); }

// ---------------------------------------------------------------------------

struct BoundArgs {
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t m = 1;
};

Json cmd_bound(const BoundArgs& a, std::ostream& text) {
  std::uint64_t r = a.r;
  std::uint64_t s = a.s;
  if (r < s) std::swap(r, s);
  const BoundReport b = a.m == 1 ? bound_report(r, s) : moore_bound_odd(r, s, a.m);
  Json j;
  j["r"] = b.r;
  j["s"] = b.s;
  j["d"] = b.d;
  j["n1_raw"] = b.n1_raw;
  j["n2_raw"] = b.n2_raw;
  j["rho"] = b.rho;
  j["sigma"] = b.sigma;
  j["moore"] = b.moore;
  if (b.improved) {
    j["improved"] = *b.improved;
  } else {
    j["improved"] = nullptr;
  }
  j["best"] = b.best;
  j["n1"] = b.n1;
  j["n2"] = b.n2;
  std::optional<PhiMargin> phi;
  if (a.m == 1 && r % s == 0 && static_cast<std::int64_t>(r / s) != static_cast<std::int64_t>(s) - 2) {
    phi = phi_margin(static_cast<std::int64_t>(r / s), static_cast<std::int64_t>(s));
    j["phi"] = phi->fraction();
  } else {
    j["phi"] = nullptr;
  }

  text << "M(" << b.r << "," << b.s << ";" << b.d << ") = " << b.moore << '\n';
  text << "N1' = " << b.n1_raw << ", N2' = " << b.n2_raw << ", rho = " << b.rho << ", sigma = " << b.sigma
       << '\n';
  if (a.m == 1) {
    if (b.improved) {
      text << "improved bound M* = " << *b.improved << '\n';
    } else {
      text << "improved bound: not applicable\n";
    }
  }
  text << "best = " << b.best << " with part sizes " << b.n1 << " + " << b.n2 << '\n';
  if (phi) text << "phi(" << phi->rho << "," << phi->s << ") = " << phi->fraction() << '\n';
  return j;
}

struct TableArgs {
  std::string kind;
  std::optional<std::uint64_t> rmax;
  std::optional<std::uint64_t> smax;
  std::string format = "md";
};

void cmd_table(const TableArgs& a, bool json, std::ostream& out) {
  const TableKind kind = parse_table_kind(a.kind);
  const TableFormat format = json ? TableFormat::kJson : parse_table_format(a.format);
  const std::uint64_t rmax = a.rmax.value_or(kind == TableKind::kMoore ? 12 : 36);
  const std::uint64_t smax = a.smax.value_or(kind == TableKind::kMoore ? 12 : 5);
  out << render_table(kind, rmax, smax, format);
}

struct SingerArgs {
  std::uint32_t q = 0;
  std::string poly;
};

Json cmd_singer(const SingerArgs& a, std::ostream& text) {
  std::optional<Poly> cubic;
  if (!a.poly.empty()) cubic = parse_poly(a.poly);
  const SingerSet s = singer_set(a.q, cubic);
  Json j;
  j["q"] = s.q;
  j["n"] = s.n;
  j["poly"] = format_poly(s.poly_used);
  j["poly_coefficients"] = s.poly_used;
  j["exponents_raw"] = s.exponents_raw;
  j["set"] = s.set;
  j["classification"] = classification_json(s.classification);

  text << "q = " << s.q << ", n = " << s.n << '\n';
  text << "phi(x) = " << format_poly(s.poly_used) << '\n';
  text << "raw exponents:";
  for (auto e : s.exponents_raw) text << ' ' << e;
  text << "\nset:";
  for (auto e : s.set) text << ' ' << e;
  text << '\n' << s.classification.label() << '\n';
  return j;
}

struct ClassifyArgs {
  std::string group;
  std::string set;
  bool matrix = false;
  bool inverse = false;
};

Json cmd_classify(const ClassifyArgs& a, std::ostream& text) {
  const Group g = group_from(a.group);
  const CandidateSet set(g, parse_element_list(g, a.set));
  const auto prof = difference_profile(set);
  const auto cls = classify_profile(prof);
  Json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["set"] = elements_json(set.elements());
  if (has_words(g)) j["words"] = words_json(g, set.elements());
  j["classification"] = classification_json(cls);
  j["counts"] = prof.counts;

  text << g.name() << "  S = " << set_text(g, set.elements()) << '\n';
  text << cls.label() << '\n';
  text << "multiplicities: " << histogram_text(cls.histogram) << '\n';
  if (!cls.missing.empty()) text << "missing: " << set_text(g, cls.missing) << '\n';
  if (!cls.repeated.empty()) {
    text << "repeated:";
    for (Element x : cls.repeated) text << ' ' << format_element(g, x) << "(x" << prof.counts[x] << ')';
    text << '\n';
  }

  if (a.matrix) {
    const auto m = difference_matrix(set);
    const std::size_t s = set.size();
    auto rows = Json::array();
    for (std::size_t i = 0; i < s; ++i) {
      std::vector<Element> row(m.begin() + i * s, m.begin() + (i + 1) * s);
      rows.push_back(row);
      for (std::size_t k = 0; k < s; ++k) text << (k ? "  " : "") << format_element(g, row[k]);
      text << '\n';
    }
    j["matrix"] = std::move(rows);
  }
  if (a.inverse) {
    const CandidateSet inv = inverse_set(set);
    const auto icls = classify_set(inv);
    j["inverse_set"] = elements_json(inv.elements());
    j["inverse_classification"] = classification_json(icls);
    text << "inverse set " << set_text(g, inv.elements()) << ": " << icls.label() << '\n';
  }
  return j;
}

struct GraphArgs {
  std::string group;
  std::string set;
  std::size_t m = 1;
  bool check_diameter = false;
  std::string export_path;
  std::string format = "edge-list";
  std::string load;
  std::optional<int> repeats;
  std::size_t workers = 1;
};

Json cmd_graph(const GraphArgs& a, std::ostream& out, std::ostream& text) {
  std::optional<BiGraph> graph;
  if (!a.load.empty()) {
    graph = load_graph_json(read_file(a.load));
  } else {
    if (a.group.empty() || a.set.empty()) throw_invalid("graph needs --group and --set, or --load");
    const Group g = group_from(a.group);
    graph = build_gm(g, CandidateSet(g, parse_element_list(g, a.set)), a.m);
  }
  const BiGraph& G = *graph;

  if (!a.export_path.empty()) {
    const std::string data = export_graph(G, parse_graph_format(a.format));
    if (a.export_path == "-") {
      out << data;
    } else {
      write_file(a.export_path, data);
    }
  }

  const auto reg = verify_biregular(G);
  Json j;
  j["group"] = G.group_name();
  j["n"] = G.n();
  j["m"] = G.m();
  j["vertices"] = G.vertex_count();
  j["edges"] = G.edge_count();
  j["biregular"] = reg.ok;
  j["degrees"] = {reg.r, reg.s};
  if (reg.offending) j["offending_vertex"] = G.name(*reg.offending);

  text << "vertices " << G.vertex_count() << " (part0 " << G.n() << ", part1 " << G.n() * G.m() << "), edges "
       << G.edge_count() << '\n';
  if (reg.ok) {
    text << "degrees (" << reg.r << "," << reg.s << ")\n";
  } else {
    text << "not biregular: " << G.name(*reg.offending) << " has degree "
         << G.neighbors(*reg.offending).size() << '\n';
  }

  if (a.check_diameter) {
    const auto d = diameter(G, a.workers);
    if (d.connected()) {
      j["diameter"] = d.diameter;
      text << "diameter " << d.diameter << " (" << G.name(d.witness.first) << " to " << G.name(d.witness.second)
           << ")\n";
    } else {
      j["diameter"] = nullptr;
      text << "diameter infinite (" << G.name(d.witness.first) << " cannot reach " << G.name(d.witness.second)
           << ")\n";
    }
    j["connected"] = d.connected();
    j["diameter_witness"] = {G.name(d.witness.first), G.name(d.witness.second)};
  }

  if (a.repeats) {
    const auto rep = find_repeats(G, *a.repeats);
    auto arr = Json::array();
    for (std::size_t i = 0; i < rep.vertices.size(); ++i) {
      if (rep.repeats[i].empty()) continue;
      auto others = Json::array();
      text << G.name(rep.vertices[i]) << ':';
      for (auto [w, k] : rep.repeats[i]) {
        others.push_back({{"vertex", G.name(w)}, {"common", k}});
        text << ' ' << G.name(w) << "(" << k << ")";
      }
      text << '\n';
      arr.push_back({{"vertex", G.name(rep.vertices[i])}, {"repeats", std::move(others)}});
    }
    j["repeats"] = std::move(arr);
  }
  return j;
}

struct SearchArgs {
  std::string group;
  std::size_t size = 0;
  bool require_inverse = false;
  bool exists_only = false;
  std::optional<std::size_t> limit;
  std::size_t workers = 1;
  bool no_prune = false;
  std::size_t resume_from = 0;
  bool progress = false;
};

Json found_json(const Group& g, const FoundSet& f) {
  Json j;
  j["set"] = f.elements;
  if (has_words(g)) j["words"] = words_json(g, f.elements);
  j["label"] = f.classification.label();
  j["classification"] = classification_json(f.classification);
  if (f.inverse_classification) j["inverse_classification"] = classification_json(*f.inverse_classification);
  return j;
}

Json outcome_json(const SearchOutcome& o) {
  Json j;
  j["exhausted"] = o.exhausted;
  j["partitions"] = o.partitions_total;
  j["completed_through"] = o.completed_through;
  j["slack"] = o.slack;
  j["candidates_examined"] = o.candidates_examined;
  j["candidates_pruned"] = o.candidates_pruned;
  j["complete_sets"] = o.complete_sets;
  return j;
}

Json cmd_search(const SearchArgs& a, std::ostream& text, std::ostream& err) {
  SearchConfig cfg;
  cfg.group = parse_group_spec(a.group);
  cfg.size = a.size;
  cfg.require_inverse_covering = a.require_inverse;
  cfg.limit = a.limit;
  cfg.prune = !a.no_prune;
  cfg.workers = a.workers;
  cfg.resume_from = a.resume_from;
  if (a.progress) {
    cfg.report_interval = 1;
    cfg.progress = [&err](const SearchProgress& p) {
      err << "progress " << p.partitions_done << "/" << p.partitions_total << " partitions, completed through "
          << p.completed_through << ", found " << p.found << '\n';
    };
  }
  const Group g = build_group(cfg.group);

  Json j;
  j["group"] = g.name();
  j["spec"] = to_string(cfg.group);
  j["order"] = g.order();
  j["size"] = cfg.size;
  j["prune"] = cfg.prune;
  j["require_inverse_covering"] = cfg.require_inverse_covering;
  j["resume_from"] = cfg.resume_from;

  text << g.name() << " (order " << g.order() << "), size " << cfg.size;
  SearchOutcome outcome;
  if (a.exists_only) {
    const ExistsResult r = exists_covering_set(g, cfg);
    outcome = r.outcome;
    j["exists"] = r.exists;
    j["witness"] = r.witness ? found_json(g, *r.witness) : Json(nullptr);
    text << ", slack " << outcome.slack << '\n';
    if (r.witness) {
      text << "exists: " << set_text(g, r.witness->elements) << "  " << r.witness->classification.label() << '\n';
    } else {
      text << "exists: no" << (outcome.exhausted ? "" : " (search incomplete)") << '\n';
    }
  } else {
    outcome = enumerate_covering_sets(g, cfg);
    if (a.limit) {
      j["limit"] = *a.limit;
    } else {
      j["limit"] = nullptr;
    }
    j["found_count"] = outcome.found.size();
    auto arr = Json::array();
    for (const auto& f : outcome.found) arr.push_back(found_json(g, f));
    j["found"] = std::move(arr);
    text << ", slack " << outcome.slack << '\n';
    text << "found " << outcome.found.size() << " covering set" << (outcome.found.size() == 1 ? "" : "s") << '\n';
    for (const auto& f : outcome.found) {
      text << set_text(g, f.elements) << "  " << f.classification.label();
      if (f.inverse_classification) text << "  inverse " << f.inverse_classification->label();
      text << '\n';
    }
  }
  j["outcome"] = outcome_json(outcome);
  text << "exhausted: " << (outcome.exhausted ? "yes" : "no") << ", completed through " << outcome.completed_through
       << " of " << outcome.partitions_total << " partitions\n";
  text << "examined " << outcome.candidates_examined << ", pruned " << outcome.candidates_pruned << '\n';
  return j;
}

struct SweepArgs {
  std::string family;
  std::vector<std::string> groups;
  std::size_t size = 0;
  bool require_inverse = false;
  bool no_prune = false;
  std::size_t workers = 1;
};

Json cmd_sweep(const SweepArgs& a, std::ostream& text, int& exit_code) {
  std::vector<GroupSpec> specs;
  if (!a.family.empty()) specs = group_family(a.family);
  for (const auto& g : a.groups) specs.push_back(parse_group_spec(g));
  if (specs.empty()) throw_invalid("sweep needs --family or at least one --group");

  SearchConfig cfg;
  cfg.size = a.size;
  cfg.require_inverse_covering = a.require_inverse;
  cfg.prune = !a.no_prune;
  cfg.workers = a.workers;
  const auto entries = sweep_family(specs, cfg);

  Json j;
  j["size"] = a.size;
  j["require_inverse_covering"] = a.require_inverse;
  auto arr = Json::array();
  for (const auto& e : entries) {
    Json row;
    row["spec"] = e.spec;
    row["group"] = e.group_name;
    row["order"] = e.order;
    row["abelian"] = e.abelian;
    text << e.spec << "  ";
    if (!e.error.empty()) {
      row["error"] = e.error;
      row["exists"] = nullptr;
      text << "error: " << e.error << '\n';
      exit_code = 3;
    } else {
      const auto& r = *e.result;
      const Group g = build_group(parse_group_spec(e.spec));
      row["exists"] = r.exists;
      row["exhausted"] = r.outcome.exhausted;
      row["witness"] = r.witness ? found_json(g, *r.witness) : Json(nullptr);
      row["candidates_examined"] = r.outcome.candidates_examined;
      text << e.group_name << " (order " << e.order << (e.abelian ? ", abelian" : ", non-abelian") << "): ";
      if (r.witness) {
        text << "yes " << set_text(g, r.witness->elements) << ' ' << r.witness->classification.label();
      } else {
        text << (r.outcome.exhausted ? "no" : "unknown");
      }
      text << '\n';
    }
    arr.push_back(std::move(row));
  }
  j["groups"] = std::move(arr);
  return j;
}

struct ValidateArgs {
  std::string group;
  std::string table;
  std::string write;
};

Json cmd_validate(const ValidateArgs& a, std::ostream& text, int& exit_code) {
  if (a.group.empty() == a.table.empty()) throw_invalid("validate-group needs exactly one of --group, --table");
  const Group g = a.table.empty() ? group_from(a.group) : load_cayley_table(a.table);
  const GroupValidation v = validate_group(g);
  if (!a.write.empty()) write_file(a.write, format_cayley_table(g));

  Json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["ok"] = v.ok();
  j["abelian"] = v.abelian;
  j["checks"] = {{"latin_square", v.latin_square},
                 {"associative", v.associative},
                 {"identity", v.identity},
                 {"inverses", v.inverses},
                 {"abelian_flag_consistent", v.abelian_flag_consistent},
                 {"orders_divide_group_order", v.orders_divide_group_order}};
  auto hist = Json::array();
  for (auto [ord, count] : v.order_histogram) hist.push_back({{"order", ord}, {"count", count}});
  j["element_orders"] = std::move(hist);
  j["involutions"] = v.involutions;

  text << g.name() << " (order " << g.order() << "): " << (v.ok() ? "valid" : "INVALID") << ", "
       << (v.abelian ? "abelian" : "non-abelian") << '\n';
  text << "element orders:";
  for (auto [ord, count] : v.order_histogram) text << ' ' << ord << ':' << count;
  text << "\ninvolutions: " << v.involutions.size() << '\n';
  if (!v.ok()) exit_code = 3;
  return j;
}

struct ReproArgs {
  bool skip_long = false;
  std::vector<int> only;
  std::size_t workers = 1;
};

Json cmd_repro(const ReproArgs& a, std::ostream& text, int& exit_code) {
  ReproOptions o;
  o.skip_long_searches = a.skip_long;
  o.only = a.only;
  o.workers = a.workers;
  const auto results = run_reproduction(o);
  Json j;
  auto arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
  }
  j["criteria"] = std::move(arr);
  j["all_pass"] = all;
  text << format_ledger(results);
  if (!all) exit_code = 3;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Difference sets, covering sets and bipartite biregular graphs of diameter 3", "diffgraph"};
  app.require_subcommand(1);
  bool timing = false;
  std::optional<std::uint64_t> seed;
  app.add_flag("--timing", timing, "Print wall time on stderr");
  app.add_option("--seed", seed, "Reserved; every algorithm is deterministic");

  bool json = false;
  auto json_flag = [&json](CLI::App* sub) { sub->add_flag("--json", json, "JSON output"); };
  const std::size_t workers_default = default_workers();

  BoundArgs bound;
  auto* c_bound = app.add_subcommand("bound", "Moore bound for odd diameter 2m+1 (default m = 1)");
  c_bound->add_option("--r", bound.r, "Degree r")->required();
  c_bound->add_option("--s", bound.s, "Degree s")->required();
  c_bound->add_option("--m", bound.m, "Half-diameter m, d = 2m+1");
  json_flag(c_bound);

  TableArgs table;
  auto* c_table = app.add_subcommand("table", "Moore or improved-bound table for diameter 3");
  c_table->add_option("--kind", table.kind, "moore | improved")->required();
  c_table->add_option("--rmax", table.rmax, "Largest r");
  c_table->add_option("--smax", table.smax, "Largest s");
  c_table->add_option("--format", table.format, "md | csv | json");
  json_flag(c_table);

  SingerArgs singer;
  auto* c_singer = app.add_subcommand("singer", "Singer perfect difference set for a prime power q");
  c_singer->add_option("--q", singer.q, "Prime power q")->required();
  c_singer->add_option("--poly", singer.poly, "Primitive cubic over GF(q), e.g. \"x^3 + 2x^2 + x + 1\"");
  json_flag(c_singer);

  ClassifyArgs classify;
  auto* c_classify = app.add_subcommand("classify", "Classify a subset by its difference profile");
  c_classify->add_option("--group", classify.group, "Group spec")->required();
  c_classify->add_option("--set", classify.set, "Comma-separated elements")->required();
  c_classify->add_flag("--matrix", classify.matrix, "Print the difference matrix");
  c_classify->add_flag("--inverse", classify.inverse, "Also classify the inverse set");
  json_flag(c_classify);

  GraphArgs graph;
  graph.workers = workers_default;
  auto* c_graph = app.add_subcommand("graph", "Build G_m(S) and inspect it");
  c_graph->add_option("--group", graph.group, "Group spec");
  c_graph->add_option("--set", graph.set, "Comma-separated elements");
  c_graph->add_option("--m", graph.m, "Number of copies in part 1");
  c_graph->add_flag("--check-diameter", graph.check_diameter, "Compute the exact diameter");
  c_graph->add_option("--export", graph.export_path, "Write the graph to a file ('-' for stdout)");
  c_graph->add_option("--format", graph.format, "edge-list | dot | json");
  c_graph->add_option("--load", graph.load, "Read a graph from the JSON export format");
  c_graph->add_option("--repeats", graph.repeats, "List same-part vertices sharing >= 2 neighbours (0 or 1)");
  c_graph->add_option("--workers", graph.workers, "BFS threads");
  json_flag(c_graph);

  SearchArgs search;
  search.workers = workers_default;
  auto* c_search = app.add_subcommand("search", "Exhaustive covering-set search");
  c_search->add_option("--group", search.group, "Group spec")->required();
  c_search->add_option("--size", search.size, "Set size s")->required();
  c_search->add_flag("--require-inverse-covering", search.require_inverse, "Keep only sets whose inverse set covers");
  c_search->add_flag("--exists-only", search.exists_only, "Stop at the least covering set");
  c_search->add_option("--limit", search.limit, "Report at most N sets");
  c_search->add_option("--workers", search.workers, "Worker threads (default: DIFFGRAPH_WORKERS or core count)");
  c_search->add_flag("--no-prune", search.no_prune, "Disable excess pruning");
  c_search->add_option("--resume-from", search.resume_from, "Skip partitions with first element below K");
  c_search->add_flag("--progress", search.progress, "Report finished partitions on stderr");
  json_flag(c_search);

  SweepArgs sweep;
  sweep.workers = workers_default;
  auto* c_sweep = app.add_subcommand("sweep", "exists-search over a list of groups");
  c_sweep->add_option("--family", sweep.family, "Preset list: " + [] {
    std::string names;
    for (const auto& n : group_family_names()) names += (names.empty() ? "" : ", ") + n;
    return names;
  }());
  c_sweep->add_option("--group", sweep.groups, "Group spec (repeatable)");
  c_sweep->add_option("--size", sweep.size, "Set size s")->required();
  c_sweep->add_flag("--require-inverse-covering", sweep.require_inverse, "Keep only sets whose inverse set covers");
  c_sweep->add_flag("--no-prune", sweep.no_prune, "Disable excess pruning");
  c_sweep->add_option("--workers", sweep.workers, "Worker threads");
  json_flag(c_sweep);

  ValidateArgs validate;
  auto* c_validate = app.add_subcommand("validate-group", "Check the group axioms of a spec or Cayley table");
  c_validate->add_option("--group", validate.group, "Group spec");
  c_validate->add_option("--table", validate.table, "Cayley table file");
  c_validate->add_option("--write", validate.write, "Write the Cayley table to a file");
  json_flag(c_validate);

  ReproArgs repro;
  repro.workers = workers_default;
  auto* c_repro = app.add_subcommand("repro", "Run the reproduction checks and print a pass/fail ledger");
  c_repro->add_flag("--skip-long", repro.skip_long, "Skip the order 40-42 searches");
  c_repro->add_option("--only", repro.only, "Criterion ids to run")->delimiter(',');
  c_repro->add_option("--workers", repro.workers, "Worker threads");
  json_flag(c_repro);

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--seed") {
      ++i;
      continue;
    }
    if (args[i].empty() || args[i].front() == '-') continue;
    const auto subs = app.get_subcommands([&](const CLI::App* c) { return c->check_name(args[i]); });
    if (subs.empty()) {
      err << "unknown command '" << args[i] << "'\n" << app.help();
      return static_cast<int>(ErrorKind::kInvalidArgument);
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    if (app.get_subcommands().empty()) err << app.help();
    return static_cast<int>(ErrorKind::kInvalidArgument);
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream text;
  int exit_code = 0;
  try {
    Json payload;
    bool raw = false;  // command writes its own output
    if (name == "bound") {
      payload = cmd_bound(bound, text);
    } else if (name == "table") {
      cmd_table(table, json, out);
      raw = true;
    } else if (name == "singer") {
      payload = cmd_singer(singer, text);
    } else if (name == "classify") {
      payload = cmd_classify(classify, text);
    } else if (name == "graph") {
      if (json && graph.export_path == "-") throw_invalid("--json cannot be combined with --export -");
      payload = cmd_graph(graph, out, text);
      raw = graph.export_path == "-";
    } else if (name == "search") {
      if (search.limit && *search.limit == 0) throw_invalid("--limit must be at least 1");
      payload = cmd_search(search, text, err);
    } else if (name == "sweep") {
      payload = cmd_sweep(sweep, text, exit_code);
    } else if (name == "validate-group") {
      payload = cmd_validate(validate, text, exit_code);
    } else if (name == "repro") {
      payload = cmd_repro(repro, text, exit_code);
    }
    if (!raw) {
      if (json) {
        Json j;
        j["command"] = name;
        for (auto& [k, v] : payload.items()) j[k] = v;
        out << j.dump(2) << '\n';
      } else {
        out << text.str();
      }
    }
  } catch (const Error& e) {
    exit_code = e.exit_code();
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    if (json) {
      Json j;
      j["command"] = name;
      j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
      j["exit_code"] = exit_code;
      out << j.dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    exit_code = static_cast<int>(ErrorKind::kInternal);
    err << "error (internal): " << e.what() << '\n';
  }
  if (timing) {
    err << "wall time "
        << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count()
        << " ms\n";
  }
  return exit_code;
}

}  // namespace diffgraph::cli
