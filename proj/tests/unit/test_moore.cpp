#include <gtest/gtest.h>

#include <numeric>

#include "diffgraph/fixtures.hpp"
#include "diffgraph/moore.hpp"
#include "json.hpp"

using namespace diffgraph;

namespace {

// Closed forms written out directly.
std::uint64_t n1_closed(std::uint64_t r, std::uint64_t s, std::uint64_t m) {
  std::uint64_t sum = 0, p = 1;
  for (std::uint64_t i = 0; i < m; ++i, p *= (r - 1) * (s - 1)) sum += p;
  return 1 + r * (s - 1) * sum;
}

std::uint64_t moore_oracle(std::uint64_t r, std::uint64_t s) {
  if (r < s) std::swap(r, s);
  const std::uint64_t n1 = 1 + r * (s - 1);
  const std::uint64_t n2 = 1 + s * (r - 1);
  if (r == s) return n1 + n2;
  const std::uint64_t g = std::gcd(r, s);
  const std::uint64_t rho = r / g, sigma = s / g;
  return (n2 / rho) * (rho + sigma);
}

}  // namespace

TEST(RawCounts, Examples) {
  const auto c = raw_counts(4, 3, 1);
  EXPECT_EQ(c.n1_raw, 9u);
  EXPECT_EQ(c.n2_raw, 10u);
  for (std::uint64_t r = 2; r <= 9; ++r)
    for (std::uint64_t s = 2; s <= 9; ++s)
      for (std::uint64_t m = 1; m <= 4; ++m) {
        const auto x = raw_counts(r, s, m);
        EXPECT_EQ(x.n1_raw, n1_closed(r, s, m));
        EXPECT_EQ(x.n2_raw, n1_closed(s, r, m));
      }
  // (r-1)(s-1) = 1: the geometric sum degenerates to m terms.
  EXPECT_EQ(raw_counts(2, 2, 1).n1_raw, 3u);
  EXPECT_EQ(raw_counts(2, 2, 5).n1_raw, 11u);
  EXPECT_EQ(moore_bound_odd(2, 2, 1).moore, 6u);
}

TEST(RawCounts, Rejects) {
  for (auto [r, s, m] : std::vector<std::array<std::uint64_t, 3>>{{1, 3, 1}, {3, 1, 1}, {3, 3, 0}}) {
    try {
      (void)raw_counts(r, s, m);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
    }
  }
  try {
    (void)raw_counts(1000000, 1000000, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapacity);
  }
}

TEST(MooreBound, PrintedCells) {
  const auto& table = fixtures::moore_table();
  EXPECT_EQ(table.size(), 61u);
  for (const auto& cell : table) {
    const auto b = moore_bound_odd(cell.r, cell.s, 1);
    EXPECT_EQ(b.moore, cell.bound) << cell.r << "," << cell.s;
    EXPECT_EQ(b.moore, moore_oracle(cell.r, cell.s));
    EXPECT_LE(cell.shown, cell.bound);
  }
  EXPECT_EQ(moore_bound_odd(3, 3, 1).moore, 14u);
  EXPECT_EQ(moore_bound_odd(4, 3, 1).moore, 14u);
  EXPECT_EQ(moore_bound_odd(6, 3, 1).moore, 24u);
  EXPECT_EQ(moore_bound_odd(8, 4, 1).moore, 42u);
  EXPECT_EQ(moore_bound_odd(3, 6, 1).moore, 24u);
}

TEST(MooreBound, Fields) {
  const auto b = moore_bound_odd(8, 4, 1);
  EXPECT_EQ(b.d, 3u);
  EXPECT_EQ(b.rho, 2u);
  EXPECT_EQ(b.sigma, 1u);
  EXPECT_EQ(b.n1 * b.r, b.n2 * b.s);
  EXPECT_EQ(b.n1 + b.n2, b.moore);
  const auto b5 = moore_bound_odd(4, 3, 2);
  EXPECT_EQ(b5.d, 5u);
  // N1' = 57, N2' = 64, rho = 4, sigma = 3
  EXPECT_EQ(b5.n1_raw, 57u);
  EXPECT_EQ(b5.n2_raw, 64u);
  EXPECT_EQ(b5.moore, 16u * 7u);
  EXPECT_EQ(b5.r * b5.n1, b5.s * b5.n2);
}

TEST(MooreBound, PartSizesBalanced) {
  for (std::uint64_t r = 2; r <= 20; ++r)
    for (std::uint64_t s = 2; s <= r; ++s)
      for (std::uint64_t m = 1; m <= 3; ++m) {
        const auto b = moore_bound_odd(r, s, m);
        EXPECT_EQ(b.r * b.n1, b.s * b.n2);
        EXPECT_LE(b.n1, b.n1_raw);
        EXPECT_LE(b.n2, b.n2_raw);
      }
}

TEST(ImprovedBound, Window) {
  EXPECT_EQ(improved_bound(2, 3)->value, 21u);
  EXPECT_EQ(improved_bound(3, 3)->value, 28u);
  EXPECT_FALSE(improved_bound(1, 3));
  EXPECT_FALSE(improved_bound(4, 3));
  EXPECT_FALSE(improved_bound(1, 2));
  EXPECT_EQ(improved_bound(3, 4)->value, 56u);
  EXPECT_EQ(improved_bound(9, 4)->value, 140u);
  EXPECT_FALSE(improved_bound(10, 4));
  for (std::uint64_t s = 3; s <= 8; ++s) {
    const auto sq = improved_bound(s, s);
    ASSERT_TRUE(sq);
    EXPECT_EQ(sq->value, (s * s - 2) * (s + 1));
    for (std::uint64_t rho = 1; rho <= s * s; ++rho) {
      const auto imp = improved_bound(rho, s);
      EXPECT_EQ(imp.has_value(), rho + 1 >= s && rho + s + 3 <= s * s);
      if (imp) {
        EXPECT_EQ(imp->n1 + imp->n2, imp->value);
        EXPECT_EQ(imp->n2, rho * imp->n1);
      }
    }
  }
}

TEST(ImprovedBound, PrintedCells) {
  for (const auto& cell : fixtures::improved_table()) {
    ASSERT_EQ(cell.r % cell.s, 0u);
    const auto imp = improved_bound(cell.r / cell.s, cell.s);
    ASSERT_TRUE(imp);
    EXPECT_EQ(imp->value, cell.value);
  }
}

TEST(ImprovedBound, NeverAboveClassical) {
  for (std::uint64_t s = 3; s <= 12; ++s)
    for (std::uint64_t rho = 1; rho * s <= 200; ++rho)
      if (auto imp = improved_bound(rho, s)) {
        EXPECT_LE(imp->value, moore_oracle(rho * s, s));
      }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi_margin(2, 3).value, Rational(4));
  EXPECT_EQ(phi_margin(2, 3).fraction(), "4/1");
  EXPECT_EQ(phi_margin(1, 4).value, Rational(-27));
  EXPECT_LE(phi_margin(4, 3).value, 0);
  try {
    (void)phi_margin(1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
  }
  EXPECT_EQ(phi_margin(5, 4).value, Rational(5 * 4 * 3, 3) - 15);
}

TEST(Phi, SignAroundWindowEdge) {
  for (std::int64_t s = 3; s <= 5; ++s) {
    const std::int64_t edge = s * s - s - 2;
    EXPECT_EQ(phi_margin(edge, s).sign(), 0) << s;
    EXPECT_EQ(phi_margin(edge - 1, s).sign(), 1) << s;
    EXPECT_EQ(phi_margin(edge + 1, s).sign(), -1) << s;
    for (std::int64_t rho = s - 1; rho < edge; ++rho) EXPECT_EQ(phi_margin(rho, s).sign(), 1);
  }
}

TEST(BoundReport, Examples) {
  const auto a = bound_report(6, 3);
  EXPECT_EQ(a.moore, 24u);
  ASSERT_TRUE(a.improved);
  EXPECT_TRUE(a.improved_applicable);
  EXPECT_EQ(*a.improved, 21u);
  EXPECT_EQ(a.best, 21u);
  EXPECT_EQ(a.n1, 7u);
  EXPECT_EQ(a.n2, 14u);

  EXPECT_EQ(*bound_report(12, 4).improved, 56u);
  const auto c = bound_report(4, 3);
  EXPECT_EQ(c.moore, 14u);
  EXPECT_FALSE(c.improved);
  EXPECT_EQ(c.best, 14u);

  // rho = s: r = s^2
  const auto sq = bound_report(9, 3);
  ASSERT_TRUE(sq.improved);
  EXPECT_EQ(*sq.improved, 28u);
  EXPECT_EQ(sq.moore, 32u);
  EXPECT_FALSE(bound_report(3, 3).improved);
  EXPECT_THROW((void)bound_report(3, 4), Error);
  EXPECT_THROW((void)bound_report(3, 1), Error);
}

TEST(BoundReport, ImprovedDiameterThreeWithCopies) {
  // G_m({0,1,3}) over Z_7 has 7(m+1) vertices, equal to the improved bound.
  for (std::uint64_t m = 1; m <= 3; ++m) {
    const auto imp = improved_bound(m, 3);
    if (m == 1) {
      EXPECT_FALSE(imp);
      continue;
    }
    ASSERT_TRUE(imp);
    EXPECT_EQ(imp->value, 7 * (m + 1));
  }
}

TEST(Tables, MooreGrid) {
  const auto grid = moore_grid(12, 12);
  EXPECT_EQ(grid.rows.size(), 11u);
  EXPECT_EQ(grid.cols.size(), 11u);
  for (const auto& cell : fixtures::moore_table()) EXPECT_EQ(grid.at(cell.r, cell.s), cell.bound);
  EXPECT_FALSE(grid.at(3, 5));
  EXPECT_TRUE(grid.blank[1][3]);
}

TEST(Tables, ImprovedGrid) {
  const auto grid = improved_grid(36, 5);
  EXPECT_EQ(grid.rows, (std::vector<std::uint64_t>{3, 4, 5}));
  EXPECT_EQ(grid.cols, fixtures::improved_table_columns());
  std::size_t values = 0;
  for (std::size_t i = 0; i < grid.rows.size(); ++i)
    for (std::size_t j = 0; j < grid.cols.size(); ++j)
      if (grid.cells[i][j]) ++values;
  EXPECT_EQ(values, fixtures::improved_table().size());
  for (const auto& c : fixtures::improved_table()) EXPECT_EQ(grid.at(c.s, c.r), c.value);
  EXPECT_EQ(grid.at(3, 6), 21u);
  EXPECT_EQ(grid.at(3, 9), 28u);
  EXPECT_FALSE(grid.at(3, 12));
  EXPECT_EQ(grid.at(5, 35), 184u);
  EXPECT_FALSE(grid.at(4, 35));
}

TEST(Tables, Rendering) {
  const std::string md = render_table(TableKind::kImproved, 36, 5, TableFormat::kMarkdown);
  EXPECT_NE(md.find("| s\\r | 6 | 9 | 12 |"), std::string::npos);
  EXPECT_NE(md.find("| 3 | 21 | 28 | - |"), std::string::npos);

  const std::string csv = render_table(TableKind::kMoore, 4, 4, TableFormat::kCsv);
  std::string expected = "r\\s,2,3,4\n";
  for (std::uint64_t r = 2; r <= 4; ++r) {
    expected += std::to_string(r);
    for (std::uint64_t s = 2; s <= 4; ++s) expected += "," + (s <= r ? std::to_string(moore_oracle(r, s)) : "");
    expected += "\n";
  }
  EXPECT_EQ(csv, expected);

  const auto j = nlohmann::json::parse(render_table(TableKind::kImproved, 36, 5, TableFormat::kJson));
  EXPECT_EQ(j["kind"], "improved");
  EXPECT_EQ(j["cells"][0][0], 21);
  EXPECT_EQ(j["cells"][0][2], "-");
  EXPECT_EQ(j["cells"][2][10], 184);

  EXPECT_EQ(render_table(TableKind::kMoore, 12, 12, TableFormat::kJson),
            render_table(moore_grid(12, 12), TableFormat::kJson));
}

TEST(Tables, ParseAndRejects) {
  EXPECT_EQ(parse_table_kind("moore"), TableKind::kMoore);
  EXPECT_EQ(parse_table_kind("improved"), TableKind::kImproved);
  EXPECT_EQ(parse_table_format("md"), TableFormat::kMarkdown);
  EXPECT_EQ(parse_table_format("csv"), TableFormat::kCsv);
  EXPECT_EQ(parse_table_format("json"), TableFormat::kJson);
  EXPECT_THROW((void)parse_table_kind("other"), Error);
  EXPECT_THROW((void)parse_table_format("xml"), Error);
  EXPECT_THROW((void)moore_grid(1, 4), Error);
}
