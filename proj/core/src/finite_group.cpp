#include "noncyc/finite_group.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "noncyc/error.hpp"

namespace noncyc {

namespace {

std::string cell(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table, std::vector<std::string> names,
                                    Validation validation) {
  if (order == 0) throw ValidationError("group order must be positive");
  if (order > kMaxTableOrder) throw CapExceededError("group order " + std::to_string(order) + " exceeds table limit");
  if (table.size() != order * order)
    throw ValidationError("table has " + std::to_string(table.size()) + " entries, expected " +
                          std::to_string(order * order));
  if (names.empty()) {
    names.resize(order);
    for (std::size_t i = 0; i < order; ++i) names[i] = "g" + std::to_string(i);
  }
  if (names.size() != order) throw ValidationError("names array has wrong length");

  for (std::size_t k = 0; k < table.size(); ++k)
    if (table[k] >= order) throw ValidationError("table entry out of range at " + cell(k / order, k % order));

  // Latin square: every row and column a permutation.
  std::vector<std::uint32_t> seen(order, 0);
  std::uint32_t stamp = 0;
  for (std::size_t i = 0; i < order; ++i) {
    ++stamp;
    for (std::size_t j = 0; j < order; ++j) {
      auto v = table[i * order + j];
      if (seen[v] == stamp) throw ValidationError("row " + std::to_string(i) + " repeats an entry");
      seen[v] = stamp;
    }
  }
  std::fill(seen.begin(), seen.end(), 0);
  stamp = 0;
  for (std::size_t j = 0; j < order; ++j) {
    ++stamp;
    for (std::size_t i = 0; i < order; ++i) {
      auto v = table[i * order + j];
      if (seen[v] == stamp) throw ValidationError("column " + std::to_string(j) + " repeats an entry");
      seen[v] = stamp;
    }
  }

  // Locate the identity: the row that reproduces the column indices.
  std::optional<std::size_t> e;
  for (std::size_t i = 0; i < order && !e; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < order && ok; ++j) ok = table[i * order + j] == j;
    for (std::size_t j = 0; j < order && ok; ++j) ok = table[j * order + i] == j;
    if (ok) e = i;
  }
  if (!e) throw ValidationError("table has no two-sided identity");
  if (*e != 0) {
    // Relabel by swapping indices 0 and e.
    auto relabel = [&](std::size_t x) -> std::size_t { return x == 0 ? *e : (x == *e ? 0 : x); };
    std::vector<Element> t(order * order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j)
        t[i * order + j] = static_cast<Element>(relabel(table[relabel(i) * order + relabel(j)]));
    table = std::move(t);
    std::swap(names[0], names[*e]);
  }

  FiniteGroup g;
  g.order_ = order;
  g.table_.assign(table.begin(), table.end());
  g.names_ = std::move(names);
  g.inverse_.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      if (table[i * order + j] == 0) {
        if (table[j * order + i] != 0) throw ValidationError("element " + std::to_string(i) + " has no two-sided inverse");
        g.inverse_[i] = static_cast<Element>(j);
        break;
      }
    }
  }
  if (validation == Validation::kFull && !g.is_associative()) throw ValidationError("table is not associative");

  g.orders_.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::uint32_t k = 1;
    Element x = static_cast<Element>(i);
    while (x != 0) {
      x = g.mul(x, static_cast<Element>(i));
      ++k;
      if (k > order) throw ValidationError("element " + std::to_string(i) + " has no finite order");
    }
    g.orders_[i] = k;
  }
  return g;
}

Element FiniteGroup::pow(Element a, long long k) const {
  const auto n = static_cast<long long>(orders_[a]);
  k %= n;
  if (k < 0) k += n;
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Element> FiniteGroup::find(const std::string& name) const {
  for (std::size_t i = 0; i < order_; ++i)
    if (names_[i] == name) return static_cast<Element>(i);
  return std::nullopt;
}

std::vector<Element> FiniteGroup::table() const { return {table_.begin(), table_.end()}; }

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (table_[i * order_ + j] != table_[j * order_ + i]) return false;
  return true;
}

bool FiniteGroup::is_associative() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) {
      const std::size_t ab = table_[a * order_ + b];
      for (std::size_t c = 0; c < order_; ++c)
        if (table_[ab * order_ + c] != table_[a * order_ + table_[b * order_ + c]]) return false;
    }
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (auto o : orders_) e = std::lcm(e, static_cast<std::size_t>(o));
  return e;
}

}  // namespace noncyc
