#pragma once

// Brute-force reference computations used by the tests. They work directly on
// integers and multiplication tables and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<std::uint32_t>>;

inline Table table_of(std::size_t n, auto mul) {
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<std::uint32_t>(mul(i, j));
  }
  return t;
}

inline bool is_group_with_identity0(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n), col(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] >= n || t[j][i] >= n || row[t[i][j]] || col[t[j][i]]) return false;
      row[t[i][j]] = col[t[j][i]] = true;
    }
    if (t[0][i] != i || t[i][0] != i) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

inline std::uint32_t inverse(const Table& t, std::uint32_t x) {
  for (std::uint32_t y = 0; y < t.size(); ++y)
    if (t[x][y] == 0) return y;
  return UINT32_MAX;
}

inline std::uint32_t element_order(const Table& t, std::uint32_t x) {
  std::uint32_t k = 1;
  for (std::uint32_t p = x; p != 0; p = t[p][x]) ++k;
  return k;
}

/// counts[g] = #{(i, j) : s_i * s_j^-1 = g}
inline std::vector<std::uint32_t> difference_counts(const Table& t, const std::vector<std::uint32_t>& s) {
  std::vector<std::uint32_t> counts(t.size(), 0);
  for (auto a : s)
    for (auto b : s) ++counts[t[a][inverse(t, b)]];
  return counts;
}

inline bool covers(const Table& t, const std::vector<std::uint32_t>& s) {
  const auto c = difference_counts(t, s);
  return std::all_of(c.begin(), c.end(), [](std::uint32_t v) { return v > 0; });
}

/// Cyclic version with plain modular arithmetic.
inline bool covers_cyclic(std::size_t n, const std::vector<std::uint32_t>& s) {
  std::vector<bool> hit(n, false);
  for (auto a : s)
    for (auto b : s) hit[(a + n - b) % n] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });
}

/// All k-subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<std::uint32_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k > n) return out;
  std::vector<std::uint32_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<std::uint32_t>(i);
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// BFS diameter of an adjacency list; UINT32_MAX if disconnected.
inline std::uint32_t diameter(const std::vector<std::vector<std::uint32_t>>& adj) {
  std::uint32_t best = 0;
  for (std::size_t src = 0; src < adj.size(); ++src) {
    std::vector<std::uint32_t> d(adj.size(), UINT32_MAX);
    std::vector<std::uint32_t> q{static_cast<std::uint32_t>(src)};
    d[src] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (auto w : adj[q[h]])
        if (d[w] == UINT32_MAX) {
          d[w] = d[q[h]] + 1;
          q.push_back(w);
        }
    for (auto x : d) best = std::max(best, x);
  }
  return best;
}

inline std::filesystem::path temp_file(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "diffgraph-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace oracle
