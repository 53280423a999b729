#include "diffgraph/bigraph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace diffgraph {

BiGraph BiGraph::from_edges(std::size_t n, std::size_t m,
                            std::span<const std::pair<Vertex, Vertex>> edges,
                            std::string group_name) {
  if (n == 0 || m == 0) throw_invalid("graph needs n >= 1 and m >= 1");
  BiGraph g;
  g.n_ = n;
  g.m_ = m;
  g.group_name_ = std::move(group_name);
  g.adjacency_.assign((m + 1) * n, {});
  for (auto [a, b] : edges) {
    if (a >= g.adjacency_.size() || b >= g.adjacency_.size()) throw_invalid("edge endpoint out of range");
    if (g.part_of(a) == g.part_of(b)) {
      throw_invalid("edge " + g.name(a) + " -- " + g.name(b) + " stays inside one part");
    }
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) throw_invalid("duplicate edge");
  }
  g.edge_count_ = edges.size();

  g.s_ = g.adjacency_[n].size();
  for (std::size_t v = n; v < g.adjacency_.size(); ++v) {
    if (g.adjacency_[v].size() != g.s_) {
      g.s_ = 0;
      break;
    }
  }
  return g;
}

std::string BiGraph::name(Vertex v) const {
  if (v < n_) return "P0_" + std::to_string(v);
  const std::size_t rest = v - n_;
  return "P1_" + std::to_string(rest / n_ + 1) + "_" + std::to_string(rest % n_);
}

namespace {

std::optional<std::size_t> take_number(std::string_view& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr == s.data()) return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return v;
}

}  // namespace

Vertex BiGraph::vertex_of(std::string_view name) const {
  const std::string original(name);
  auto bad = [&]() { throw_invalid("bad vertex name '" + original + "'"); };
  if (name.rfind("P0_", 0) == 0) {
    name.remove_prefix(3);
    auto u = take_number(name);
    if (!u || !name.empty() || *u >= n_) bad();
    return static_cast<Vertex>(*u);
  }
  if (name.rfind("P1_", 0) == 0) {
    name.remove_prefix(3);
    auto l = take_number(name);
    if (!l || name.empty() || name.front() != '_') bad();
    name.remove_prefix(1);
    auto v = take_number(name);
    if (!v || !name.empty() || *l < 1 || *l > m_ || *v >= n_) bad();
    return part1_vertex(*l, static_cast<Element>(*v));
  }
  bad();
  return 0;
}

std::vector<std::pair<Vertex, Vertex>> BiGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex v = static_cast<Vertex>(n_); v < adjacency_.size(); ++v) {
    for (Vertex u : adjacency_[v]) out.emplace_back(v, u);
  }
  return out;
}

BiGraph BiGraph::without_edge(Vertex a, Vertex b) const {
  auto all = edges();
  const std::pair<Vertex, Vertex> key = part_of(a) == 1 ? std::pair{a, b} : std::pair{b, a};
  auto it = std::find(all.begin(), all.end(), key);
  if (it == all.end()) throw_invalid("no edge " + name(a) + " -- " + name(b));
  all.erase(it);
  return from_edges(n_, m_, all, group_name_);
}

BiGraph build_gm(const Group& group, const CandidateSet& set, std::size_t m) {
  if (m == 0) throw_invalid("copy count m must be at least 1");
  const std::size_t n = group.order();
  if (set.size() >= n) {
    throw_invalid("degenerate input: |S| = " + std::to_string(set.size()) + " must be below n = " +
                  std::to_string(n));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m * n * set.size());
  for (std::size_t l = 1; l <= m; ++l) {
    for (Element v = 0; v < n; ++v) {
      const Vertex from = static_cast<Vertex>(n + (l - 1) * n + v);
      for (Element t : set.elements()) edges.emplace_back(from, group.mul(v, t));
    }
  }
  return BiGraph::from_edges(n, m, edges, group.name());
}

std::vector<std::uint32_t> bfs_distances(const BiGraph& graph, Vertex source) {
  std::vector<std::uint32_t> dist(graph.vertex_count(), kInfinite);
  std::vector<Vertex> queue;
  queue.reserve(graph.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : graph.neighbors(v)) {
      if (dist[w] == kInfinite) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DiameterReport diameter(const BiGraph& graph, std::size_t workers) {
  const std::size_t nv = graph.vertex_count();
  DiameterReport report;
  report.eccentricity.assign(nv, 0);
  // far[v]: a vertex at maximal distance from v (first unreachable one if any)
  std::vector<Vertex> far(nv, 0);

  auto run = [&](std::size_t begin, std::size_t step) {
    for (std::size_t v = begin; v < nv; v += step) {
      const auto dist = bfs_distances(graph, static_cast<Vertex>(v));
      std::uint32_t ecc = 0;
      Vertex arg = static_cast<Vertex>(v);
      for (std::size_t w = 0; w < nv; ++w) {
        if (dist[w] > ecc) {
          ecc = dist[w];
          arg = static_cast<Vertex>(w);
        }
      }
      report.eccentricity[v] = ecc;
      far[v] = arg;
    }
  };

  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(nv, 1));
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    for (auto& t : pool) t.join();
  }

  for (std::size_t v = 0; v < nv; ++v) {
    if (v == 0 || report.eccentricity[v] > report.diameter) {
      report.diameter = report.eccentricity[v];
      report.witness = {static_cast<Vertex>(v), far[v]};
    }
  }
  return report;
}

Biregularity verify_biregular(const BiGraph& graph) {
  Biregularity out;
  const std::size_t n = graph.n();
  const std::size_t nv = graph.vertex_count();
  auto mode = [&](std::size_t begin, std::size_t end) {
    std::map<std::size_t, std::size_t> freq;
    for (std::size_t v = begin; v < end; ++v) ++freq[graph.neighbors(static_cast<Vertex>(v)).size()];
    return std::max_element(freq.begin(), freq.end(),
                            [](const auto& a, const auto& b) { return a.second < b.second; })
        ->first;
  };
  out.r = mode(0, n);
  out.s = mode(n, nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t expected = v < n ? out.r : out.s;
    if (graph.neighbors(static_cast<Vertex>(v)).size() != expected) {
      out.offending = static_cast<Vertex>(v);
      return out;
    }
  }
  out.ok = true;
  return out;
}

RepeatReport find_repeats(const BiGraph& graph, int part) {
  if (part != 0 && part != 1) throw_invalid("part must be 0 or 1");
  RepeatReport report;
  report.part = part;
  const std::size_t n = graph.n();
  const std::size_t begin = part == 0 ? 0 : n;
  const std::size_t end = part == 0 ? n : graph.vertex_count();
  std::vector<std::uint32_t> shared(graph.vertex_count(), 0);
  std::vector<Vertex> touched;
  for (std::size_t u = begin; u < end; ++u) {
    report.vertices.push_back(static_cast<Vertex>(u));
    touched.clear();
    for (Vertex mid : graph.neighbors(static_cast<Vertex>(u))) {
      for (Vertex w : graph.neighbors(mid)) {
        if (w == u) continue;
        if (shared[w]++ == 0) touched.push_back(w);
      }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<std::pair<Vertex, std::uint32_t>> reps;
    for (Vertex w : touched) {
      if (shared[w] >= 2) reps.emplace_back(w, shared[w]);
      shared[w] = 0;
    }
    report.repeats.push_back(std::move(reps));
  }
  return report;
}

GraphFormat parse_graph_format(std::string_view text) {
  if (text == "edge-list" || text == "edges") return GraphFormat::kEdgeList;
  if (text == "dot") return GraphFormat::kDot;
  if (text == "json") return GraphFormat::kJson;
  throw_invalid("unknown graph format '" + std::string(text) + "' (edge-list, dot, json)");
}

std::string export_graph(const BiGraph& graph, GraphFormat format) {
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(graph.edge_count());
  for (auto [a, b] : graph.edges()) named.emplace_back(graph.name(a), graph.name(b));
  std::sort(named.begin(), named.end());

  std::ostringstream out;
  switch (format) {
    case GraphFormat::kEdgeList:
      for (const auto& [a, b] : named) out << a << ' ' << b << '\n';
      break;
    case GraphFormat::kDot:
      out << "graph G {\n";
      for (const auto& [a, b] : named) out << "  " << a << " -- " << b << ";\n";
      out << "}\n";
      break;
    case GraphFormat::kJson: {
      nlohmann::ordered_json j;
      j["n"] = graph.n();
      j["m"] = graph.m();
      j["s"] = graph.s();
      j["group_name"] = graph.group_name();
      auto part0 = nlohmann::ordered_json::array();
      auto part1 = nlohmann::ordered_json::array();
      for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        (graph.part_of(v) == 0 ? part0 : part1).push_back(graph.name(v));
      }
      j["part0"] = std::move(part0);
      j["part1"] = std::move(part1);
      auto edges = nlohmann::ordered_json::array();
      for (const auto& [a, b] : named) edges.push_back({a, b});
      j["edges"] = std::move(edges);
      out << j.dump(1) << '\n';
      break;
    }
  }
  return out.str();
}

BiGraph load_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kValidation, std::string("graph JSON: ") + e.what());
  }
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    const std::size_t m = j.at("m").get<std::size_t>();
    const std::string group_name = j.value("group_name", std::string{});
    // A skeleton graph resolves names to ids.
    const BiGraph names = BiGraph::from_edges(n, m, {}, group_name);
    if (j.at("part0").size() != n || j.at("part1").size() != n * m) {
      throw Error(ErrorKind::kValidation, "graph JSON: part sizes do not match n and m");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
      Vertex a = names.vertex_of(e.at(0).get<std::string>());
      Vertex b = names.vertex_of(e.at(1).get<std::string>());
      if (names.part_of(a) == 0) std::swap(a, b);
      edges.emplace_back(a, b);
    }
    BiGraph g = BiGraph::from_edges(n, m, edges, group_name);
    if (j.contains("s") && j.at("s").get<std::size_t>() != g.s()) {
      throw Error(ErrorKind::kValidation, "graph JSON: stated s does not match the edges");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kValidation, std::string("graph JSON: ") + e.what());
  }
}

}  // namespace diffgraph
