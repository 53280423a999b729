#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffgraph/error.hpp"

namespace diffgraph {

// Field elements are indices 0..q-1. For GF(p^k) the index is sum c_i p^i,
// where c_i are the coefficients of the residue polynomial, so 0 is zero,
// 1 is one and p is the class of x.
using FieldElement = std::uint32_t;

/// Coefficients over some field, constant term first.
using Poly = std::vector<FieldElement>;

// Table budget for FiniteField: q*q entries.
inline constexpr std::uint32_t kMaxTabledFieldOrder = 1024;

bool is_prime(std::uint64_t n);
/// q = p^k with p prime, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);
/// Distinct prime divisors in ascending order (trial division).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// GF(q) with full addition and multiplication tables.
class FiniteField {
 public:
  static FiniteField prime(std::uint32_t p);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  /// Defining polynomial over GF(p); {0, 1} (that is, x) for a prime field.
  const Poly& modulus() const noexcept { return modulus_; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept { return add_[a * q_ + b]; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept { return mul_[a * q_ + b]; }
  FieldElement neg(FieldElement a) const noexcept { return neg_[a]; }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
  /// Multiplicative inverse; inv(0) is 0.
  FieldElement inv(FieldElement a) const noexcept { return inv_[a]; }
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

  /// A multiplicative generator: the class of x for extensions, the least
  /// primitive root for prime fields.
  FieldElement generator() const noexcept { return generator_; }
  std::uint64_t multiplicative_order(FieldElement a) const;

  std::string name() const;

 private:
  friend FiniteField build_field(std::uint32_t p, std::uint32_t k);
  FiniteField() = default;
  void finish_tables();

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  Poly modulus_;
  std::vector<FieldElement> add_;
  std::vector<FieldElement> mul_;
  std::vector<FieldElement> neg_;
  std::vector<FieldElement> inv_;
  FieldElement generator_ = 0;
};

/// GF(p^k). The modulus is the lexicographically least (constant term first)
/// monic primitive polynomial of degree k over GF(p).
FiniteField build_field(std::uint32_t p, std::uint32_t k);

// ---------------------------------------------------------------------------
// Polynomials over a FiniteField

/// Drops leading zero coefficients.
void normalize(Poly& f);
Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b);
/// a mod f, f monic.
Poly poly_mod(const FiniteField& F, const Poly& a, const Poly& f);
Poly poly_gcd(const FiniteField& F, Poly a, Poly b);
/// x^e mod f.
Poly poly_xpow_mod(const FiniteField& F, std::uint64_t e, const Poly& f);
/// Value of f at a.
FieldElement poly_eval(const FiniteField& F, const Poly& f, FieldElement a);

/// Root test for degree <= 3, Ben-Or gcd test otherwise. f must be monic.
bool is_irreducible(const FiniteField& F, const Poly& f);
/// Irreducible and x has multiplicative order exactly q^d - 1 modulo f.
bool is_primitive(const FiniteField& F, const Poly& f);

/// Least monic primitive polynomial of the given degree, ordered by the
/// coefficient tuple (c_0, ..., c_{d-1}) ascending.
Poly find_primitive_poly(const FiniteField& F, std::uint32_t degree);
Poly find_primitive_cubic(const FiniteField& F);

/// "x^3 + 2x^2 + x + 1"; coefficients are printed as field indices.
std::string format_poly(const Poly& f);
/// Reads format_poly output ("x^3 + 2x^2 + x + 1"; '-' and '*' are not
/// accepted) or a comma list of coefficients, constant term first ("1,1,2,1").
Poly parse_poly(std::string_view text);

/// GF(q^d) as residues modulo a monic irreducible f over a FiniteField.
/// Elements are coefficient vectors of length d; nothing is tabled.
class ExtensionField {
 public:
  using Value = std::vector<FieldElement>;

  ExtensionField(const FiniteField& base, Poly modulus);

  const FiniteField& base() const noexcept { return *base_; }
  const Poly& modulus() const noexcept { return modulus_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return order_; }

  Value zero() const { return Value(degree_, 0); }
  Value one() const;
  Value x() const;
  /// c0 + c1 x (degree must be >= 2 for c1 to survive).
  Value linear(FieldElement c0, FieldElement c1) const;

  Value add(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value pow(Value a, std::uint64_t e) const;

  /// Base-q digits, constant coefficient least significant.
  std::uint64_t encode(const Value& a) const;
  Value decode(std::uint64_t index) const;

 private:
  const FiniteField* base_;
  Poly modulus_;
  std::uint32_t degree_;
  std::uint64_t order_;
};

}  // namespace diffgraph
