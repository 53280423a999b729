#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffgraph/error.hpp"

namespace diffgraph {

// Group elements are dense indices 0..n-1; the identity is always 0.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

// Table budget: n*n cells must stay within one million.
inline constexpr std::size_t kDefaultMaxOrder = 1000;

/// A finite group stored as its full multiplication table.
///
/// Values are immutable once built and may be shared freely between threads.
class Group {
 public:
  /// Wraps a row-major table whose identity is index 0. The table is trusted:
  /// callers that did not construct it themselves go through
  /// load_cayley_table() or validate_group().
  static Group from_table(std::string name, std::size_t order, std::vector<Element> table);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  bool abelian() const noexcept { return abelian_; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  std::uint32_t element_order(Element a) const noexcept { return element_orders_[a]; }

  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> row(Element a) const noexcept {
    return std::span<const Element>(table_).subspan(a * order_, order_);
  }
  std::span<const Element> inverses() const noexcept { return inverse_; }
  std::span<const std::uint32_t> element_orders() const noexcept { return element_orders_; }

  /// Named generators used when parsing words such as "b*a^-1*b^2".
  const std::map<char, Element>& generators() const noexcept { return generators_; }
  Group with_generators(std::map<char, Element> generators) const;
  Group renamed(std::string name) const;

  /// Elements of order 2, ascending.
  std::vector<Element> involutions() const;

  /// Table equality; names and generators are ignored.
  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  Group() = default;

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> element_orders_;
  std::map<char, Element> generators_;
  bool abelian_ = false;
};

Group build_cyclic(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

// Element (x, y) is encoded as x * |h| + y.
Group build_direct_product(const Group& g, const Group& h,
                           std::size_t max_order = kDefaultMaxOrder);

// Z_m x| Z_n with b a b^-1 = a^k. Element a^i b^j is encoded as i * n + j, so
// k = 1 gives exactly the table of build_direct_product(Z_m, Z_n).
Group build_semidirect(std::size_t m, std::size_t n, std::size_t k,
                       std::size_t max_order = kDefaultMaxOrder);

// Dihedral group of order 2n, as Z_n x| Z_2 with k = n - 1.
Group build_dihedral(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

// ---------------------------------------------------------------------------
// Cayley-table files

enum class TableFault {
  kMalformed,
  kOutOfRange,
  kNotLatinRow,
  kNotLatinColumn,
  kNoIdentity,
  kNotAssociative,
};

const char* to_string(TableFault fault);

/// Raised for any table that fails the group axioms. row/col name the first
/// offending cell in file coordinates (0-based element indices) when one exists.
class TableError : public Error {
 public:
  TableError(TableFault fault, std::optional<std::size_t> row, std::optional<std::size_t> col,
             const std::string& what)
      : Error(ErrorKind::kValidation, what), fault_(fault), row_(row), col_(col) {}

  TableFault fault() const noexcept { return fault_; }
  std::optional<std::size_t> row() const noexcept { return row_; }
  std::optional<std::size_t> col() const noexcept { return col_; }

 private:
  TableFault fault_;
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
};

/// Parses and fully validates a table. If the identity is not element 0 the
/// elements 0 and e are swapped so that it is.
Group parse_cayley_table(std::istream& in, std::string name = "table",
                         std::size_t max_order = kDefaultMaxOrder);
Group parse_cayley_table(const std::string& text, std::string name = "table",
                         std::size_t max_order = kDefaultMaxOrder);
Group load_cayley_table(const std::string& path, std::size_t max_order = kDefaultMaxOrder);

void write_cayley_table(const Group& g, std::ostream& out);
std::string format_cayley_table(const Group& g);

// ---------------------------------------------------------------------------
// Validation

struct GroupValidation {
  bool latin_square = false;
  bool associative = false;
  bool identity = false;
  bool inverses = false;
  bool abelian_flag_consistent = false;
  bool orders_divide_group_order = false;
  bool abelian = false;
  std::map<std::uint32_t, std::size_t> order_histogram;
  std::vector<Element> involutions;

  bool ok() const noexcept {
    return latin_square && associative && identity && inverses && abelian_flag_consistent &&
           orders_divide_group_order;
  }
};

GroupValidation validate_group(const Group& g);

}  // namespace diffgraph
