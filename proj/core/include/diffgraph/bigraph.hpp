#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffgraph/diffset.hpp"
#include "diffgraph/group.hpp"

namespace diffgraph {

using Vertex = std::uint32_t;
inline constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();

/// Bipartite graph with one copy of the group in part 0 and m copies in part 1.
///
/// Vertex ids: (0, u) is u; (l, v) with 1 <= l <= m is n + (l - 1) n + v.
/// Names are "P0_<u>" and "P1_<l>_<v>".
class BiGraph {
 public:
  /// Edges are given as (part-1 vertex, part-0 vertex) id pairs.
  static BiGraph from_edges(std::size_t n, std::size_t m,
                            std::span<const std::pair<Vertex, Vertex>> edges,
                            std::string group_name = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  /// Common degree of the part-1 vertices, or 0 if they differ.
  std::size_t s() const noexcept { return s_; }
  const std::string& group_name() const noexcept { return group_name_; }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }

  int part_of(Vertex v) const noexcept { return v < n_ ? 0 : 1; }
  Vertex part0_vertex(Element u) const noexcept { return u; }
  Vertex part1_vertex(std::size_t copy, Element v) const noexcept {
    return static_cast<Vertex>(n_ + (copy - 1) * n_ + v);
  }
  std::string name(Vertex v) const;
  /// For names produced by name(); throws on anything else.
  Vertex vertex_of(std::string_view name) const;

  /// Sorted (part-1, part-0) pairs.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  BiGraph without_edge(Vertex a, Vertex b) const;

  friend bool operator==(const BiGraph& a, const BiGraph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.s_ == b.s_ && a.group_name_ == b.group_name_ &&
           a.adjacency_ == b.adjacency_;
  }

 private:
  BiGraph() = default;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t s_ = 0;
  std::size_t edge_count_ = 0;
  std::string group_name_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// (l, v) ~ (0, v * t) for every t in S and 1 <= l <= m. Requires m >= 1 and
/// |S| < |group|.
BiGraph build_gm(const Group& group, const CandidateSet& set, std::size_t m);

/// Distances from one source; kInfinite marks unreachable vertices.
std::vector<std::uint32_t> bfs_distances(const BiGraph& graph, Vertex source);

struct DiameterReport {
  std::uint32_t diameter = 0;  // kInfinite when disconnected
  std::vector<std::uint32_t> eccentricity;
  std::pair<Vertex, Vertex> witness{0, 0};

  bool connected() const noexcept { return diameter != kInfinite; }
};

/// Exact diameter from a BFS at every vertex. workers > 1 splits the sources
/// across threads; the result does not depend on the split.
DiameterReport diameter(const BiGraph& graph, std::size_t workers = 1);

struct Biregularity {
  bool ok = false;
  std::size_t r = 0;  // part-0 degree
  std::size_t s = 0;  // part-1 degree
  std::optional<Vertex> offending;
};

/// Each part must have a single degree. On failure the first vertex whose
/// degree differs from its part's most common degree is reported.
Biregularity verify_biregular(const BiGraph& graph);

struct RepeatReport {
  int part = 0;
  std::vector<Vertex> vertices;  // all vertices of the part, ascending
  // repeats[i]: same-part vertices sharing >= 2 neighbours with vertices[i]
  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> repeats;
};

RepeatReport find_repeats(const BiGraph& graph, int part);

enum class GraphFormat { kEdgeList, kDot, kJson };

GraphFormat parse_graph_format(std::string_view text);
std::string export_graph(const BiGraph& graph, GraphFormat format);
/// Reads the JSON export format back.
BiGraph load_graph_json(std::string_view text);

}  // namespace diffgraph
