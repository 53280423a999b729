#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "diffgraph/error.hpp"

namespace diffgraph {

using Rational = boost::rational<std::int64_t>;

// Degrees r, s and the half-diameter m of an odd diameter d = 2m + 1.
struct RawCounts {
  std::uint64_t n1_raw = 0;  // tree count from a degree-r vertex
  std::uint64_t n2_raw = 0;  // tree count from a degree-s vertex
};

/// N1' = 1 + r(s-1) * sum_{i<m} [(r-1)(s-1)]^i and symmetrically N2'.
/// The finite geometric sum equals the usual closed form whenever
/// (r-1)(s-1) != 1 and stays exact at r = s = 2. Requires r, s >= 2, m >= 1;
/// overflow of 64 bits is a capacity error.
RawCounts raw_counts(std::uint64_t r, std::uint64_t s, std::uint64_t m);

struct BoundReport {
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t d = 0;
  std::uint64_t n1_raw = 0;
  std::uint64_t n2_raw = 0;
  std::uint64_t rho = 0;    // r / gcd(r, s)
  std::uint64_t sigma = 0;  // s / gcd(r, s)
  std::uint64_t moore = 0;  // classical bound M
  std::optional<std::uint64_t> improved;  // M*, when its window applies
  bool improved_applicable = false;
  std::uint64_t best = 0;  // min(M, M*)
  // Part sizes realizing `best`; r * n1 == s * n2.
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
};

/// Odd-diameter Moore bound M(r, s; 2m+1). Arguments are swapped so that
/// r >= s. For r = s the bound is N1' + N2'.
BoundReport moore_bound_odd(std::uint64_t r, std::uint64_t s, std::uint64_t m);

struct ImprovedBound {
  std::uint64_t value = 0;  // (s^2 - 2)(rho + 1)
  std::uint64_t n1 = 0;     // s^2 - 2
  std::uint64_t n2 = 0;     // rho (s^2 - 2)
};

/// Improved diameter-3 bound for [rho*s, s; 3]-bigraphs; nullopt outside the
/// window s >= 3, s - 1 <= rho <= s^2 - s - 3.
std::optional<ImprovedBound> improved_bound(std::uint64_t rho, std::uint64_t s);

struct PhiMargin {
  std::int64_t rho = 0;
  std::int64_t s = 0;
  Rational value;

  int sign() const noexcept { return value > 0 ? 1 : (value < 0 ? -1 : 0); }
  std::string fraction() const;  // "p/q"
};

/// phi(rho, s) = rho s (s-1) / (rho - s + 2) - (s^2 - 1), exactly. The pole
/// rho = s - 2 is an invalid-argument error.
PhiMargin phi_margin(std::int64_t rho, std::int64_t s);

/// Diameter-3 report: classical bound plus M* when r = rho s falls inside
/// the improved window. Requires r >= s >= 2.
BoundReport bound_report(std::uint64_t r, std::uint64_t s);

// ---------------------------------------------------------------------------
// Tables

enum class TableKind { kMoore, kImproved };
enum class TableFormat { kMarkdown, kCsv, kJson };

TableKind parse_table_kind(std::string_view text);
TableFormat parse_table_format(std::string_view text);

/// A rendered grid. Moore grids have rows r = 2..r_max and columns
/// s = 2..s_max with cells only for s <= r. Improved grids have rows
/// s = 3..s_max and, as columns, every r <= r_max that is rho*s inside the
/// window for at least one row; other cells are dashes.
struct TableGrid {
  TableKind kind = TableKind::kMoore;
  std::vector<std::uint64_t> rows;
  std::vector<std::uint64_t> cols;
  // cells[i][j]: value, or nullopt for a dash / blank
  std::vector<std::vector<std::optional<std::uint64_t>>> cells;
  // true where the cell is structurally empty (s > r in a Moore grid)
  std::vector<std::vector<bool>> blank;

  std::optional<std::uint64_t> at(std::uint64_t row, std::uint64_t col) const;
};

TableGrid moore_grid(std::uint64_t r_max, std::uint64_t s_max);
TableGrid improved_grid(std::uint64_t r_max, std::uint64_t s_max);
TableGrid build_table(TableKind kind, std::uint64_t r_max, std::uint64_t s_max);

std::string render_table(const TableGrid& grid, TableFormat format);
std::string render_table(TableKind kind, std::uint64_t r_max, std::uint64_t s_max,
                         TableFormat format);

}  // namespace diffgraph
