#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "noncyc/bitset.hpp"

namespace noncyc {

/// Index of a group element inside its Cayley table.
using Element = std::uint32_t;

/// A subset of the elements of one group, as a membership bit-vector over
/// element indices. Used for subgroups, centralizers and cyclicizer sets.
using ElementSet = Bitset;

/// Largest order whose Cayley table fits the 16-bit storage.
inline constexpr std::size_t kMaxTableOrder = 65535;

/// A finite group given by its Cayley table. The identity is always index 0.
///
/// Immutable after construction. Element orders and inverses are computed
/// once on construction.
class FiniteGroup {
 public:
  enum class Validation {
    kStructural,  ///< Latin square, identity and inverses.
    kFull,        ///< Structural plus exhaustive associativity, O(n^3).
  };

  /// Validates `table` (row-major, n*n) and builds the group. If the identity
  /// is not at index 0 the elements are relabelled so that it is.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table, std::vector<std::string> names = {},
                                Validation validation = Validation::kFull);

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, long long k) const;
  /// a^b = b^-1 a b
  Element conj(Element a, Element b) const { return mul(mul(inv(b), a), b); }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  std::size_t element_order(Element a) const { return orders_[a]; }
  std::span<const std::uint32_t> element_orders() const { return orders_; }

  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(const std::string& name) const;

  /// Row-major copy of the table with 32-bit entries.
  std::vector<Element> table() const;

  bool is_abelian() const;
  /// Exhaustive associativity check.
  bool is_associative() const;
  std::size_t exponent() const;

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet full_set() const {
    ElementSet s(order_);
    s.set_all();
    return s;
  }

  bool operator==(const FiniteGroup& o) const { return order_ == o.order_ && table_ == o.table_; }

  /// Empty placeholder (order 0); only useful as a target for assignment.
  FiniteGroup() = default;

 private:

  std::size_t order_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::string> names_;
};

}  // namespace noncyc
