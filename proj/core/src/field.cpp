#include "diffgraph/field.hpp"

#include <algorithm>
#include <charconv>

namespace diffgraph {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q itself is prime
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), k};
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const noexcept {
  FieldElement result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t FiniteField::multiplicative_order(FieldElement a) const {
  if (a == 0) throw_invalid("zero has no multiplicative order");
  std::uint64_t k = 1;
  for (FieldElement x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

std::string FiniteField::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

void FiniteField::finish_tables() {
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (FieldElement a = 0; a < q_; ++a) {
    for (FieldElement b = 0; b < q_; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
}

FiniteField FiniteField::prime(std::uint32_t p) {
  if (!is_prime(p)) throw_invalid(std::to_string(p) + " is not prime");
  if (p > kMaxTabledFieldOrder) throw_capacity("prime field order too large to table");
  FiniteField F;
  F.q_ = p;
  F.p_ = p;
  F.k_ = 1;
  F.modulus_ = {0, 1};
  F.add_.resize(std::size_t{p} * p);
  F.mul_.resize(std::size_t{p} * p);
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      F.add_[a * p + b] = (a + b) % p;
      F.mul_[a * p + b] = static_cast<FieldElement>(std::uint64_t{a} * b % p);
    }
  }
  F.finish_tables();

  const auto factors = distinct_prime_factors(p - 1);
  F.generator_ = 1;
  for (FieldElement g = 1; g < p; ++g) {
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t l) {
      return F.pow(g, (p - 1) / l) != 1;
    });
    if (primitive) {
      F.generator_ = g;
      break;
    }
  }
  return F;
}

FiniteField build_field(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw_invalid(std::to_string(p) + " is not prime");
  if (k == 0) throw_invalid("field extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxTabledFieldOrder) {
      throw_capacity("GF(" + std::to_string(p) + "^" + std::to_string(k) + ") is too large to table");
    }
  }
  FiniteField prime_field = FiniteField::prime(p);
  if (k == 1) return prime_field;

  const Poly f = find_primitive_poly(prime_field, k);
  const ExtensionField ext(prime_field, f);

  FiniteField F;
  F.q_ = static_cast<std::uint32_t>(q);
  F.p_ = p;
  F.k_ = k;
  F.modulus_ = f;
  F.add_.resize(q * q);
  F.mul_.resize(q * q);
  std::vector<ExtensionField::Value> values;
  values.reserve(q);
  for (std::uint64_t a = 0; a < q; ++a) values.push_back(ext.decode(a));
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      F.add_[a * q + b] = static_cast<FieldElement>(ext.encode(ext.add(values[a], values[b])));
      F.mul_[a * q + b] = static_cast<FieldElement>(ext.encode(ext.mul(values[a], values[b])));
    }
  }
  F.finish_tables();
  F.generator_ = p;  // the class of x
  return F;
}

// ---------------------------------------------------------------------------

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  normalize(out);
  return out;
}

Poly poly_mod(const FiniteField& F, const Poly& a, const Poly& f) {
  Poly r = a;
  normalize(r);
  const std::size_t df = f.size() - 1;
  const FieldElement lead_inv = F.inv(f.back());
  while (r.size() > df) {
    const FieldElement c = F.mul(r.back(), lead_inv);
    const std::size_t shift = r.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, f[i]));
    normalize(r);
  }
  return r;
}

Poly poly_gcd(const FiniteField& F, Poly a, Poly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const FieldElement li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

namespace {

Poly poly_pow_mod(const FiniteField& F, Poly base, std::uint64_t e, const Poly& f) {
  Poly result{1};
  base = poly_mod(F, base, f);
  while (e) {
    if (e & 1) result = poly_mod(F, poly_mul(F, result, base), f);
    base = poly_mod(F, poly_mul(F, base, base), f);
    e >>= 1;
  }
  return poly_mod(F, result, f);
}

bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

}  // namespace

Poly poly_xpow_mod(const FiniteField& F, std::uint64_t e, const Poly& f) {
  return poly_pow_mod(F, Poly{0, 1}, e, f);
}

FieldElement poly_eval(const FiniteField& F, const Poly& f, FieldElement a) {
  FieldElement acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = F.add(F.mul(acc, a), *it);
  return acc;
}

bool is_irreducible(const FiniteField& F, const Poly& f_in) {
  Poly f = f_in;
  normalize(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  if (d <= 3) {
    for (FieldElement a = 0; a < F.order(); ++a) {
      if (poly_eval(F, f, a) == 0) return false;
    }
    return true;
  }
  // Ben-Or: f is irreducible iff gcd(f, x^(q^i) - x) = 1 for 1 <= i <= d/2.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    h = poly_pow_mod(F, h, F.order(), f);
    Poly t = h;
    t.resize(std::max<std::size_t>(t.size(), 2), 0);
    t[1] = F.sub(t[1], 1);
    normalize(t);
    if (!is_one(poly_gcd(F, f, t))) return false;
  }
  return true;
}

bool is_primitive(const FiniteField& F, const Poly& f_in) {
  Poly f = f_in;
  normalize(f);
  if (f.size() < 2 || f.back() != 1) return false;
  if (!is_irreducible(F, f)) return false;
  const std::size_t d = f.size() - 1;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) n *= F.order();
  n -= 1;
  if (!is_one(poly_xpow_mod(F, n, f))) return false;
  for (std::uint64_t l : distinct_prime_factors(n)) {
    if (is_one(poly_xpow_mod(F, n / l, f))) return false;
  }
  return true;
}

Poly find_primitive_poly(const FiniteField& F, std::uint32_t degree) {
  if (degree == 0) throw_invalid("polynomial degree must be positive");
  Poly f(degree + 1, 0);
  f[degree] = 1;
  const FieldElement q = F.order();
  // Odometer over (c_0, ..., c_{d-1}) with c_{d-1} varying fastest.
  while (true) {
    if (is_primitive(F, f)) return f;
    std::int64_t pos = static_cast<std::int64_t>(degree) - 1;
    while (pos >= 0 && ++f[pos] == q) {
      f[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  throw_internal("no primitive polynomial of degree " + std::to_string(degree) + " over " + F.name());
}

Poly find_primitive_cubic(const FiniteField& F) { return find_primitive_poly(F, 3); }

std::string format_poly(const Poly& f_in) {
  Poly f = f_in;
  normalize(f);
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const FieldElement c = f[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

std::uint32_t read_uint(std::string_view t, std::string_view whole) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw_invalid("bad polynomial '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view t) {
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  return t;
}

}  // namespace

Poly parse_poly(std::string_view text) {
  const std::string_view whole = text;
  Poly f;
  auto set_coeff = [&](std::size_t deg, std::uint32_t c) {
    if (f.size() <= deg) f.resize(deg + 1, 0);
    f[deg] += c;
  };
  if (text.find('x') == std::string_view::npos) {
    std::size_t i = 0;
    while (true) {
      const auto comma = text.find(',');
      set_coeff(i++, read_uint(trim(text.substr(0, comma)), whole));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    while (true) {
      const auto plus = text.find('+');
      std::string_view term = trim(text.substr(0, plus));
      const auto xpos = term.find('x');
      if (xpos == std::string_view::npos) {
        set_coeff(0, read_uint(term, whole));
      } else {
        const std::string_view head = trim(term.substr(0, xpos));
        const std::uint32_t c = head.empty() ? 1 : read_uint(head, whole);
        std::string_view tail = trim(term.substr(xpos + 1));
        std::size_t deg = 1;
        if (!tail.empty()) {
          if (tail.front() != '^') throw_invalid("bad polynomial '" + std::string(whole) + "'");
          deg = read_uint(trim(tail.substr(1)), whole);
        }
        set_coeff(deg, c);
      }
      if (plus == std::string_view::npos) break;
      text.remove_prefix(plus + 1);
    }
  }
  normalize(f);
  if (f.empty()) throw_invalid("polynomial is zero");
  return f;
}

// ---------------------------------------------------------------------------

ExtensionField::ExtensionField(const FiniteField& base, Poly modulus)
    : base_(&base), modulus_(std::move(modulus)) {
  normalize(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1) throw_invalid("extension modulus must be monic of positive degree");
  for (FieldElement c : modulus_) {
    if (c >= base.order()) throw_invalid("modulus coefficient out of range for " + base.name());
  }
  if (!is_irreducible(base, modulus_)) throw_invalid(format_poly(modulus_) + " is reducible over " + base.name());
  degree_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  order_ = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) order_ *= base.order();
}

ExtensionField::Value ExtensionField::one() const {
  Value v = zero();
  v[0] = 1;
  return v;
}

ExtensionField::Value ExtensionField::x() const {
  Value v = zero();
  if (degree_ >= 2) {
    v[1] = 1;
  } else {
    v[0] = base_->neg(modulus_[0]);
  }
  return v;
}

ExtensionField::Value ExtensionField::linear(FieldElement c0, FieldElement c1) const {
  Value v = zero();
  v[0] = c0;
  if (degree_ >= 2) {
    v[1] = c1;
  } else {
    v[0] = base_->add(c0, base_->mul(c1, x()[0]));
  }
  return v;
}

ExtensionField::Value ExtensionField::add(const Value& a, const Value& b) const {
  Value out(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) out[i] = base_->add(a[i], b[i]);
  return out;
}

ExtensionField::Value ExtensionField::mul(const Value& a, const Value& b) const {
  const FiniteField& F = *base_;
  std::vector<FieldElement> prod(2 * degree_ - 1, 0);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < degree_; ++j) {
      prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    }
  }
  // Reduce with x^d = -(m_0 + ... + m_{d-1} x^{d-1}).
  for (std::size_t top = prod.size(); top-- > degree_;) {
    const FieldElement c = prod[top];
    if (c == 0) continue;
    const std::size_t shift = top - degree_;
    for (std::uint32_t i = 0; i < degree_; ++i) {
      prod[shift + i] = F.sub(prod[shift + i], F.mul(c, modulus_[i]));
    }
    prod[top] = 0;
  }
  prod.resize(degree_);
  return prod;
}

ExtensionField::Value ExtensionField::pow(Value a, std::uint64_t e) const {
  Value result = one();
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t ExtensionField::encode(const Value& a) const {
  std::uint64_t index = 0;
  for (std::size_t i = degree_; i-- > 0;) index = index * base_->order() + a[i];
  return index;
}

ExtensionField::Value ExtensionField::decode(std::uint64_t index) const {
  Value v(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    v[i] = static_cast<FieldElement>(index % base_->order());
    index /= base_->order();
  }
  return v;
}

}  // namespace diffgraph
