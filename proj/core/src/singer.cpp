#include "diffgraph/singer.hpp"

#include <algorithm>

namespace diffgraph {

SingerSet singer_set(std::uint32_t q, const std::optional<Poly>& cubic) {
  const auto pk = prime_power(q);
  if (!pk) throw_invalid(std::to_string(q) + " is not a prime power");
  const FiniteField base = build_field(pk->first, pk->second);

  Poly phi;
  if (cubic) {
    phi = *cubic;
    normalize(phi);
    if (phi.size() != 4) throw_invalid("supplied polynomial " + format_poly(phi) + " is not a cubic");
    for (FieldElement c : phi) {
      if (c >= q) throw_invalid("coefficient out of range for " + base.name());
    }
    if (!is_primitive(base, phi)) {
      throw_invalid(format_poly(phi) + " is not primitive over " + base.name());
    }
  } else {
    phi = find_primitive_cubic(base);
  }

  const ExtensionField top(base, phi);
  const std::uint64_t period = top.order() - 1;  // q^3 - 1

  // One pass over the powers of x records every discrete log.
  std::vector<std::uint64_t> log(top.order(), period);
  ExtensionField::Value power = top.one();
  const ExtensionField::Value x = top.x();
  for (std::uint64_t e = 0; e < period; ++e) {
    const std::uint64_t idx = top.encode(power);
    if (log[idx] != period) throw_internal("x is not primitive modulo " + format_poly(phi));
    log[idx] = e;
    power = top.mul(power, x);
  }

  SingerSet out;
  out.q = q;
  out.n = std::size_t{q} * q + q + 1;
  out.poly_used = phi;
  out.exponents_raw = {0, 1};
  for (FieldElement alpha = 1; alpha < q; ++alpha) {
    out.exponents_raw.push_back(log[top.encode(top.linear(1, alpha))]);
  }
  std::sort(out.exponents_raw.begin(), out.exponents_raw.end());

  for (std::uint64_t e : out.exponents_raw) out.set.push_back(static_cast<Element>(e % out.n));
  std::sort(out.set.begin(), out.set.end());
  if (std::adjacent_find(out.set.begin(), out.set.end()) != out.set.end()) {
    throw_internal("Singer exponents collide modulo " + std::to_string(out.n));
  }

  const Group zn = build_cyclic(out.n, std::max(kDefaultMaxOrder, out.n));
  out.classification = classify_set(CandidateSet(zn, out.set));
  if (out.classification.verdict != Verdict::kPerfect) {
    throw_internal("Singer set for q=" + std::to_string(q) + " is not perfect");
  }
  return out;
}

}  // namespace diffgraph
