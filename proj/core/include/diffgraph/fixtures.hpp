#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diffgraph/group.hpp"

namespace diffgraph::fixtures {

/// One printed cell of the diameter-3 Moore table. `bound` is the computed
/// Moore value; `shown` is the printed headline figure, which is smaller when
/// a better construction or a non-existence proof is known.
struct MooreCell {
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t bound = 0;
  std::uint64_t shown = 0;
  bool optimal = false;
  bool asterisk = false;
  bool diamond = false;
};

/// Numeric cells for 2 <= s <= r <= 12. Dashed cells are absent.
const std::vector<MooreCell>& moore_table();

struct ImprovedCell {
  std::uint64_t s = 0;
  std::uint64_t r = 0;
  std::uint64_t value = 0;
};

/// The non-dash cells of the improved-bound table (s = 3, 4, 5; r <= 36).
const std::vector<ImprovedCell>& improved_table();
/// Column set of the improved-bound table.
const std::vector<std::uint64_t>& improved_table_columns();

struct PerfectSet {
  std::size_t n = 0;
  std::vector<Element> set;
  std::uint64_t bound_per_copy = 0;  // improved bound is bound_per_copy * (m + 1)
};

/// Perfect cyclic difference sets for s in {3,4,5,6,8,9,10,12}.
const std::vector<PerfectSet>& perfect_sets();

/// The ADS in Z_39.
const std::vector<Element>& z39_ads();

/// The covering 7-set of Z_5 : Z_8 (k = 2), as words in a and b.
inline constexpr const char* gamma1_set_words = "1,b,b^4,ba,ba^-1b^2,ab^-1,bab^2";

}  // namespace diffgraph::fixtures
