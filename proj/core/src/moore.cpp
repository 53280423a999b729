#include "diffgraph/moore.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace diffgraph {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw_capacity("Moore count overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw_capacity("Moore count overflows 64 bits");
  return out;
}

// 1 + X + ... + X^{m-1}
std::uint64_t geometric_sum(std::uint64_t x, std::uint64_t m) {
  std::uint64_t sum = 0;
  std::uint64_t term = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    sum = checked_add(sum, term);
    if (i + 1 < m) term = checked_mul(term, x);
  }
  return sum;
}

}  // namespace

RawCounts raw_counts(std::uint64_t r, std::uint64_t s, std::uint64_t m) {
  if (r < 2 || s < 2) throw_invalid("degrees must be at least 2");
  if (m < 1) throw_invalid("half-diameter m must be at least 1");
  const std::uint64_t sum = geometric_sum((r - 1) * (s - 1), m);
  RawCounts out;
  out.n1_raw = checked_add(1, checked_mul(checked_mul(r, s - 1), sum));
  out.n2_raw = checked_add(1, checked_mul(checked_mul(s, r - 1), sum));
  return out;
}

BoundReport moore_bound_odd(std::uint64_t r, std::uint64_t s, std::uint64_t m) {
  if (r < s) std::swap(r, s);
  const RawCounts raw = raw_counts(r, s, m);
  BoundReport b;
  b.r = r;
  b.s = s;
  b.d = 2 * m + 1;
  b.n1_raw = raw.n1_raw;
  b.n2_raw = raw.n2_raw;
  const std::uint64_t g = std::gcd(r, s);
  b.rho = r / g;
  b.sigma = s / g;
  if (r == s) {
    b.moore = checked_add(raw.n1_raw, raw.n2_raw);
    b.n1 = raw.n1_raw;
    b.n2 = raw.n2_raw;
  } else {
    const std::uint64_t q = raw.n2_raw / b.rho;
    b.moore = checked_mul(q, b.rho + b.sigma);
    b.n1 = q * b.sigma;
    b.n2 = q * b.rho;
  }
  b.best = b.moore;
  return b;
}

std::optional<ImprovedBound> improved_bound(std::uint64_t rho, std::uint64_t s) {
  if (s < 3) return std::nullopt;
  if (rho + 1 < s || rho + s + 3 > s * s) return std::nullopt;  // s-1 <= rho <= s^2-s-3
  ImprovedBound b;
  b.n1 = s * s - 2;
  b.n2 = rho * b.n1;
  b.value = b.n1 * (rho + 1);
  return b;
}

std::string PhiMargin::fraction() const {
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

PhiMargin phi_margin(std::int64_t rho, std::int64_t s) {
  const std::int64_t denom = rho - s + 2;
  if (denom == 0) throw_invalid("phi has a pole at rho = s - 2");
  PhiMargin out;
  out.rho = rho;
  out.s = s;
  out.value = Rational(rho * s * (s - 1), denom) - Rational(s * s - 1);
  return out;
}

BoundReport bound_report(std::uint64_t r, std::uint64_t s) {
  if (s < 2 || r < s) throw_invalid("bound_report requires r >= s >= 2");
  BoundReport b = moore_bound_odd(r, s, 1);
  if (r % s == 0) {
    if (auto imp = improved_bound(r / s, s)) {
      b.improved = imp->value;
      b.improved_applicable = true;
      if (imp->value < b.moore) {
        b.best = imp->value;
        b.n1 = imp->n1;
        b.n2 = imp->n2;
      }
    }
  }
  return b;
}

// ---------------------------------------------------------------------------

TableKind parse_table_kind(std::string_view text) {
  if (text == "moore") return TableKind::kMoore;
  if (text == "improved") return TableKind::kImproved;
  throw_invalid("unknown table kind '" + std::string(text) + "' (moore, improved)");
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "md" || text == "markdown") return TableFormat::kMarkdown;
  if (text == "csv") return TableFormat::kCsv;
  if (text == "json") return TableFormat::kJson;
  throw_invalid("unknown table format '" + std::string(text) + "' (md, csv, json)");
}

std::optional<std::uint64_t> TableGrid::at(std::uint64_t row, std::uint64_t col) const {
  auto ri = std::find(rows.begin(), rows.end(), row);
  auto ci = std::find(cols.begin(), cols.end(), col);
  if (ri == rows.end() || ci == cols.end()) return std::nullopt;
  return cells[ri - rows.begin()][ci - cols.begin()];
}

TableGrid moore_grid(std::uint64_t r_max, std::uint64_t s_max) {
  if (r_max < 2 || s_max < 2) throw_invalid("table bounds must be at least 2");
  TableGrid g;
  g.kind = TableKind::kMoore;
  for (std::uint64_t r = 2; r <= r_max; ++r) g.rows.push_back(r);
  for (std::uint64_t s = 2; s <= s_max; ++s) g.cols.push_back(s);
  for (std::uint64_t r : g.rows) {
    auto& row = g.cells.emplace_back();
    auto& blank = g.blank.emplace_back();
    for (std::uint64_t s : g.cols) {
      if (s > r) {
        row.push_back(std::nullopt);
        blank.push_back(true);
      } else {
        row.push_back(moore_bound_odd(r, s, 1).moore);
        blank.push_back(false);
      }
    }
  }
  return g;
}

TableGrid improved_grid(std::uint64_t r_max, std::uint64_t s_max) {
  if (r_max < 2 || s_max < 2) throw_invalid("table bounds must be at least 2");
  TableGrid g;
  g.kind = TableKind::kImproved;
  std::set<std::uint64_t> cols;
  for (std::uint64_t s = 3; s <= s_max; ++s) {
    g.rows.push_back(s);
    for (std::uint64_t rho = 1; rho * s <= r_max; ++rho) {
      if (improved_bound(rho, s)) cols.insert(rho * s);
    }
  }
  g.cols.assign(cols.begin(), cols.end());
  for (std::uint64_t s : g.rows) {
    auto& row = g.cells.emplace_back();
    g.blank.emplace_back(g.cols.size(), false);
    for (std::uint64_t r : g.cols) {
      std::optional<ImprovedBound> imp;
      if (r % s == 0) imp = improved_bound(r / s, s);
      row.push_back(imp ? std::optional<std::uint64_t>(imp->value) : std::nullopt);
    }
  }
  return g;
}

TableGrid build_table(TableKind kind, std::uint64_t r_max, std::uint64_t s_max) {
  return kind == TableKind::kMoore ? moore_grid(r_max, s_max) : improved_grid(r_max, s_max);
}

std::string render_table(const TableGrid& grid, TableFormat format) {
  const bool moore = grid.kind == TableKind::kMoore;
  const std::string corner = moore ? "r\\s" : "s\\r";
  auto cell_text = [&](std::size_t i, std::size_t j) -> std::string {
    if (grid.blank[i][j]) return "";
    const auto& v = grid.cells[i][j];
    return v ? std::to_string(*v) : "-";
  };

  std::ostringstream out;
  switch (format) {
    case TableFormat::kMarkdown: {
      out << "| " << corner << " |";
      for (auto c : grid.cols) out << ' ' << c << " |";
      out << "\n|---|";
      for (std::size_t j = 0; j < grid.cols.size(); ++j) out << "---|";
      out << '\n';
      for (std::size_t i = 0; i < grid.rows.size(); ++i) {
        out << "| " << grid.rows[i] << " |";
        for (std::size_t j = 0; j < grid.cols.size(); ++j) out << ' ' << cell_text(i, j) << " |";
        out << '\n';
      }
      break;
    }
    case TableFormat::kCsv: {
      out << corner;
      for (auto c : grid.cols) out << ',' << c;
      out << '\n';
      for (std::size_t i = 0; i < grid.rows.size(); ++i) {
        out << grid.rows[i];
        for (std::size_t j = 0; j < grid.cols.size(); ++j) out << ',' << cell_text(i, j);
        out << '\n';
      }
      break;
    }
    case TableFormat::kJson: {
      nlohmann::ordered_json j;
      j["kind"] = moore ? "moore" : "improved";
      j["row_label"] = moore ? "r" : "s";
      j["col_label"] = moore ? "s" : "r";
      j["rows"] = grid.rows;
      j["cols"] = grid.cols;
      auto cells = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < grid.rows.size(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < grid.cols.size(); ++k) {
          const auto& v = grid.cells[i][k];
          if (grid.blank[i][k]) {
            row.push_back(nullptr);
          } else if (v) {
            row.push_back(*v);
          } else {
            row.push_back("-");
          }
        }
        cells.push_back(std::move(row));
      }
      j["cells"] = std::move(cells);
      out << j.dump() << '\n';
      break;
    }
  }
  return out.str();
}

std::string render_table(TableKind kind, std::uint64_t r_max, std::uint64_t s_max,
                         TableFormat format) {
  return render_table(build_table(kind, r_max, s_max), format);
}

}  // namespace diffgraph
