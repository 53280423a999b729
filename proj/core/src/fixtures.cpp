#include "diffgraph/fixtures.hpp"

namespace diffgraph::fixtures {

const std::vector<MooreCell>& moore_table() {
  // r, s, bound, shown, optimal, asterisk, diamond
  static const std::vector<MooreCell> cells = {
      {2, 2, 6, 6, true, false, false},
      {3, 3, 14, 14, true, false, false},
      {4, 2, 9, 9, true, false, false},
      {4, 3, 14, 14, true, true, true},
      {4, 4, 26, 26, true, false, false},
      {5, 3, 16, 16, true, true, false},
      {5, 4, 27, 27, false, false, false},
      {5, 5, 42, 42, true, false, false},
      {6, 2, 12, 12, true, false, false},
      {6, 3, 24, 21, true, false, true},
      {6, 4, 35, 30, false, false, false},
      {6, 5, 44, 44, false, false, false},
      {6, 6, 62, 62, true, false, false},
      {7, 3, 20, 20, true, true, false},
      {7, 4, 33, 33, false, false, false},
      {7, 5, 48, 48, false, false, false},
      {7, 6, 65, 65, false, false, false},
      {7, 7, 86, 86, false, false, false},
      {8, 2, 15, 15, true, false, false},
      {8, 3, 22, 22, true, true, false},
      {8, 4, 42, 42, false, false, false},
      {8, 5, 52, 52, false, false, false},
      {8, 6, 70, 70, false, false, false},
      {8, 7, 90, 90, false, false, false},
      {8, 8, 114, 114, true, false, false},
      {9, 3, 32, 28, false, true, false},
      {9, 4, 39, 39, false, false, false},
      {9, 5, 56, 56, false, false, false},
      {9, 6, 80, 80, false, false, false},
      {9, 7, 96, 96, false, false, false},
      {9, 8, 119, 119, false, false, false},
      {9, 9, 146, 146, true, false, false},
      {10, 2, 18, 18, true, false, false},
      {10, 3, 26, 26, true, true, false},
      {10, 4, 49, 49, false, false, false},
      {10, 5, 69, 66, false, false, false},
      {10, 6, 88, 80, false, false, false},
      {10, 7, 102, 102, false, false, false},
      {10, 8, 126, 126, false, false, false},
      {10, 9, 152, 152, false, false, false},
      {10, 10, 182, 182, true, false, false},
      {11, 3, 28, 28, true, true, false},
      {11, 4, 45, 45, false, false, false},
      {11, 5, 64, 64, false, false, false},
      {11, 6, 85, 85, false, false, false},
      {11, 7, 108, 108, false, false, false},
      {11, 8, 133, 133, false, false, false},
      {11, 9, 160, 160, false, false, false},
      {11, 10, 189, 189, false, false, false},
      {11, 11, 222, 222, false, false, false},
      {12, 2, 21, 21, true, false, false},
      {12, 3, 40, 35, false, true, false},
      {12, 4, 60, 60, false, false, false},
      {12, 5, 68, 68, false, false, false},
      {12, 6, 99, 99, false, false, false},
      {12, 7, 114, 114, false, false, false},
      {12, 8, 145, 145, false, false, false},
      {12, 9, 175, 175, false, false, false},
      {12, 10, 198, 198, false, false, false},
      {12, 11, 230, 230, false, false, false},
      {12, 12, 266, 266, true, false, false},
  };
  return cells;
}

const std::vector<ImprovedCell>& improved_table() {
  static const std::vector<ImprovedCell> cells = {
      {3, 6, 21},   {3, 9, 28},
      {4, 12, 56},  {4, 16, 70},  {4, 20, 84},  {4, 24, 98},
      {4, 28, 112}, {4, 32, 126}, {4, 36, 140},
      {5, 20, 115}, {5, 25, 138}, {5, 30, 161}, {5, 35, 184},
  };
  return cells;
}

const std::vector<std::uint64_t>& improved_table_columns() {
  static const std::vector<std::uint64_t> cols = {6, 9, 12, 16, 20, 24, 25, 28, 30, 32, 35, 36};
  return cols;
}

const std::vector<PerfectSet>& perfect_sets() {
  static const std::vector<PerfectSet> sets = {
      {7, {0, 1, 3}, 7},
      {13, {0, 1, 3, 9}, 14},
      {21, {0, 1, 4, 14, 16}, 23},
      {31, {0, 1, 6, 18, 22, 29}, 34},
      {57, {0, 1, 5, 7, 17, 35, 38, 49}, 62},
      {73, {0, 1, 17, 39, 41, 44, 48, 54, 62}, 79},
      {91, {0, 1, 3, 9, 27, 49, 56, 61, 77, 81}, 98},
      {133, {0, 1, 3, 12, 20, 34, 38, 81, 88, 94, 104, 109}, 142},
  };
  return sets;
}

const std::vector<Element>& z39_ads() {
  static const std::vector<Element> set = {0, 1, 2, 4, 13, 18, 33};
  return set;
}

}  // namespace diffgraph::fixtures
