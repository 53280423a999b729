#include "diffgraph/group.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

namespace diffgraph {

namespace {

void check_order(std::size_t n, std::size_t max_order) {
  if (n == 0) throw_invalid("group order must be positive");
  if (n > max_order) {
    throw_capacity("group order " + std::to_string(n) + " exceeds the maximum of " +
                   std::to_string(max_order));
  }
}

std::string cell(std::size_t row, std::size_t col) {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

// Latin square, identity and associativity, in that order. Throws on the first
// violation; returns the identity index.
Element check_table(std::size_t n, std::span<const Element> table) {
  std::vector<std::size_t> seen(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = table[i * n + j];
      if (v >= n) {
        throw TableError(TableFault::kOutOfRange, i, j,
                         "entry " + std::to_string(v) + " out of range at cell " + cell(i, j));
      }
      if (seen[v] == i) {
        throw TableError(TableFault::kNotLatinRow, i, j,
                         "row " + std::to_string(i) + " repeats " + std::to_string(v) +
                             " at cell " + cell(i, j));
      }
      seen[v] = i;
    }
  }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = table[i * n + j];
      if (seen[v] == j) {
        throw TableError(TableFault::kNotLatinColumn, i, j,
                         "column " + std::to_string(j) + " repeats " + std::to_string(v) +
                             " at cell " + cell(i, j));
      }
      seen[v] = j;
    }
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool is_identity = true;
    for (std::size_t g = 0; g < n && is_identity; ++g) {
      is_identity = table[e * n + g] == g && table[g * n + e] == g;
    }
    if (is_identity) identity = static_cast<Element>(e);
  }
  if (!identity) throw TableError(TableFault::kNoIdentity, std::nullopt, std::nullopt, "no identity element");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = table[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
          throw TableError(TableFault::kNotAssociative, a, b,
                           "associativity fails for (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return *identity;
}

}  // namespace

Group Group::from_table(std::string name, std::size_t order, std::vector<Element> table) {
  if (order == 0 || table.size() != order * order) throw_internal("table size does not match order");

  Group g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.table_ = std::move(table);
  g.inverse_.assign(order, static_cast<Element>(order));
  g.element_orders_.assign(order, 0);

  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      if (g.mul(a, b) == kIdentity) {
        g.inverse_[a] = b;
        break;
      }
    }
    // Bounded so that a corrupt table cannot loop forever; 0 marks "no order".
    Element x = a;
    for (std::uint32_t k = 1; k <= order; ++k) {
      if (x == kIdentity) {
        g.element_orders_[a] = k;
        break;
      }
      x = g.mul(x, a);
    }
  }

  g.abelian_ = true;
  for (Element a = 0; a < order && g.abelian_; ++a) {
    for (Element b = a + 1; b < order; ++b) {
      if (g.mul(a, b) != g.mul(b, a)) {
        g.abelian_ = false;
        break;
      }
    }
  }
  return g;
}

Group Group::with_generators(std::map<char, Element> generators) const {
  Group copy = *this;
  copy.generators_ = std::move(generators);
  return copy;
}

Group Group::renamed(std::string name) const {
  Group copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::vector<Element> Group::involutions() const {
  std::vector<Element> out;
  for (Element g = 0; g < order_; ++g) {
    if (element_orders_[g] == 2) out.push_back(g);
  }
  return out;
}

Group build_cyclic(std::size_t n, std::size_t max_order) {
  check_order(n, max_order);
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  std::map<char, Element> gens;
  if (n > 1) gens['a'] = 1;
  return Group::from_table("Z_" + std::to_string(n), n, std::move(table)).with_generators(gens);
}

Group build_direct_product(const Group& g, const Group& h, std::size_t max_order) {
  const std::size_t gn = g.order();
  const std::size_t hn = h.order();
  if (hn != 0 && gn > max_order / hn) {
    throw_capacity("direct product order " + std::to_string(gn) + "*" + std::to_string(hn) +
                   " exceeds the maximum of " + std::to_string(max_order));
  }
  const std::size_t n = gn * hn;
  check_order(n, max_order);
  std::vector<Element> table(n * n);
  for (std::size_t x1 = 0; x1 < gn; ++x1) {
    for (std::size_t y1 = 0; y1 < hn; ++y1) {
      const std::size_t row = x1 * hn + y1;
      for (std::size_t x2 = 0; x2 < gn; ++x2) {
        const std::size_t x = g.mul(static_cast<Element>(x1), static_cast<Element>(x2));
        for (std::size_t y2 = 0; y2 < hn; ++y2) {
          const std::size_t y = h.mul(static_cast<Element>(y1), static_cast<Element>(y2));
          table[row * n + x2 * hn + y2] = static_cast<Element>(x * hn + y);
        }
      }
    }
  }
  return Group::from_table(g.name() + " x " + h.name(), n, std::move(table));
}

Group build_semidirect(std::size_t m, std::size_t n, std::size_t k, std::size_t max_order) {
  if (m == 0 || n == 0 || k == 0) throw_invalid("semidirect parameters must be positive");
  if (m > max_order / n) {
    throw_capacity("semidirect order " + std::to_string(m) + "*" + std::to_string(n) +
                   " exceeds the maximum of " + std::to_string(max_order));
  }
  if (std::gcd(k, m) != 1) {
    throw_invalid("invalid action: gcd(" + std::to_string(k) + "," + std::to_string(m) + ") != 1");
  }
  // powers[j] = k^j mod m
  std::vector<std::size_t> powers(n + 1, 1 % m);
  for (std::size_t j = 1; j <= n; ++j) powers[j] = powers[j - 1] * k % m;
  if (powers[n] != 1 % m) {
    throw_invalid("invalid action: " + std::to_string(k) + "^" + std::to_string(n) +
                  " is not 1 mod " + std::to_string(m));
  }

  const std::size_t order = m * n;
  check_order(order, max_order);
  std::vector<Element> table(order * order);
  for (std::size_t i1 = 0; i1 < m; ++i1) {
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      const std::size_t row = i1 * n + j1;
      for (std::size_t i2 = 0; i2 < m; ++i2) {
        const std::size_t i = (i1 + i2 * powers[j1]) % m;
        for (std::size_t j2 = 0; j2 < n; ++j2) {
          table[row * order + i2 * n + j2] = static_cast<Element>(i * n + (j1 + j2) % n);
        }
      }
    }
  }
  std::map<char, Element> gens;
  if (m > 1) gens['a'] = static_cast<Element>(n);  // (1, 0)
  if (n > 1) gens['b'] = 1;                        // (0, 1)
  std::string name = "Z_" + std::to_string(m) + " : Z_" + std::to_string(n) + " (k=" +
                     std::to_string(k) + ")";
  return Group::from_table(std::move(name), order, std::move(table)).with_generators(gens);
}

Group build_dihedral(std::size_t n, std::size_t max_order) {
  if (n < 1) throw_invalid("dihedral parameter must be positive");
  // n = 1, 2 degenerate to abelian groups of order 2 and 4; k = n - 1 is then 0 or 1.
  const std::size_t k = n == 1 ? 1 : n - 1;
  return build_semidirect(n, 2, k, max_order).renamed("D_" + std::to_string(2 * n));
}

// ---------------------------------------------------------------------------

const char* to_string(TableFault fault) {
  switch (fault) {
    case TableFault::kMalformed:
      return "malformed";
    case TableFault::kOutOfRange:
      return "out-of-range";
    case TableFault::kNotLatinRow:
      return "not-latin-row";
    case TableFault::kNotLatinColumn:
      return "not-latin-column";
    case TableFault::kNoIdentity:
      return "no-identity";
    case TableFault::kNotAssociative:
      return "not-associative";
  }
  return "unknown";
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> parse_index(std::string_view tok) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace

Group parse_cayley_table(std::istream& in, std::string name, std::size_t max_order) {
  std::vector<std::vector<std::string_view>> rows;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    if (split_ws(line).empty()) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw TableError(TableFault::kMalformed, std::nullopt, std::nullopt, "empty table file");

  auto header = split_ws(lines.front());
  std::optional<std::size_t> n_opt = header.size() == 1 ? parse_index(header[0]) : std::nullopt;
  if (!n_opt || *n_opt == 0) {
    throw TableError(TableFault::kMalformed, std::nullopt, std::nullopt,
                     "first line must hold the positive group order");
  }
  const std::size_t n = *n_opt;
  if (n > max_order) {
    throw_capacity("table order " + std::to_string(n) + " exceeds the maximum of " +
                   std::to_string(max_order));
  }
  if (lines.size() != n + 1) {
    throw TableError(TableFault::kMalformed, std::nullopt, std::nullopt,
                     "expected " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size() - 1));
  }

  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto toks = split_ws(lines[i + 1]);
    if (toks.size() != n) {
      throw TableError(TableFault::kMalformed, i, std::nullopt,
                       "row " + std::to_string(i) + " has " + std::to_string(toks.size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      auto v = parse_index(toks[j]);
      if (!v) {
        throw TableError(TableFault::kMalformed, i, j,
                         "non-integer entry '" + std::string(toks[j]) + "' at cell " + cell(i, j));
      }
      if (*v >= n) {
        throw TableError(TableFault::kOutOfRange, i, j,
                         "entry " + std::to_string(*v) + " out of range at cell " + cell(i, j));
      }
      table[i * n + j] = static_cast<Element>(*v);
    }
  }

  const Element e = check_table(n, table);
  if (e != kIdentity) {
    auto relabel = [e](Element x) -> Element { return x == e ? kIdentity : x == kIdentity ? e : x; };
    std::vector<Element> swapped(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        swapped[relabel(static_cast<Element>(i)) * n + relabel(static_cast<Element>(j))] =
            relabel(table[i * n + j]);
      }
    }
    table = std::move(swapped);
  }
  return Group::from_table(std::move(name), n, std::move(table));
}

Group parse_cayley_table(const std::string& text, std::string name, std::size_t max_order) {
  std::istringstream in(text);
  return parse_cayley_table(in, std::move(name), max_order);
}

Group load_cayley_table(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw TableError(TableFault::kMalformed, std::nullopt, std::nullopt, "cannot open " + path);
  return parse_cayley_table(in, "file:" + path, max_order);
}

void write_cayley_table(const Group& g, std::ostream& out) {
  const std::size_t n = g.order();
  out << "# " << g.name() << "\n" << n << "\n";
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << "\n";
  }
}

std::string format_cayley_table(const Group& g) {
  std::ostringstream out;
  write_cayley_table(g, out);
  return out.str();
}

// ---------------------------------------------------------------------------

GroupValidation validate_group(const Group& g) {
  GroupValidation report;
  const std::size_t n = g.order();

  report.latin_square = true;
  std::vector<std::size_t> seen(n, n);
  for (std::size_t i = 0; i < n && report.latin_square; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = g.mul(static_cast<Element>(i), static_cast<Element>(j));
      if (v >= n || seen[v] == i) {
        report.latin_square = false;
        break;
      }
      seen[v] = i;
    }
  }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t j = 0; j < n && report.latin_square; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = g.mul(static_cast<Element>(i), static_cast<Element>(j));
      if (seen[v] == j) {
        report.latin_square = false;
        break;
      }
      seen[v] = j;
    }
  }

  report.identity = true;
  for (Element x = 0; x < n; ++x) {
    if (g.mul(kIdentity, x) != x || g.mul(x, kIdentity) != x) {
      report.identity = false;
      break;
    }
  }

  report.inverses = true;
  for (Element x = 0; x < n; ++x) {
    const Element y = g.inv(x);
    if (y >= n || g.mul(x, y) != kIdentity || g.mul(y, x) != kIdentity || g.inv(y) != x) {
      report.inverses = false;
      break;
    }
  }

  report.associative = report.latin_square;
  for (Element a = 0; a < n && report.associative; ++a) {
    for (Element b = 0; b < n && report.associative; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          report.associative = false;
          break;
        }
      }
    }
  }

  bool commutative = true;
  for (Element a = 0; a < n && commutative; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (g.mul(a, b) != g.mul(b, a)) {
        commutative = false;
        break;
      }
    }
  }
  report.abelian = commutative;
  report.abelian_flag_consistent = commutative == g.abelian();

  report.orders_divide_group_order = true;
  for (Element x = 0; x < n; ++x) {
    const std::uint32_t ord = g.element_order(x);
    if (ord == 0 || n % ord != 0) report.orders_divide_group_order = false;
    ++report.order_histogram[ord];
  }
  report.involutions = g.involutions();
  return report;
}

}  // namespace diffgraph
