#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diffgraph/diffset.hpp"
#include "diffgraph/field.hpp"
#include "diffgraph/group.hpp"

namespace diffgraph {

/// Perfect difference set of size q + 1 in Z_{q^2+q+1}, read off the
/// multiplicative structure of GF(q^3) over GF(q).
struct SingerSet {
  std::uint32_t q = 0;
  std::size_t n = 0;
  Poly poly_used;  // primitive cubic over GF(q), coefficients as GF(q) indices
  // Discrete logs of 1, x and 1 + a x (a in GF(q)*), ascending, before mod n.
  std::vector<std::uint64_t> exponents_raw;
  std::vector<Element> set;  // reduced mod n, ascending
  SetClassification classification;
};

/// Uses find_primitive_cubic() unless a cubic is supplied. The result is
/// re-classified and an internal error is raised if it is not perfect.
SingerSet singer_set(std::uint32_t q, const std::optional<Poly>& cubic = std::nullopt);

}  // namespace diffgraph
