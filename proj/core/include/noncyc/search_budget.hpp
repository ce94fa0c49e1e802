#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "noncyc/error.hpp"

namespace noncyc {

/// Node and wall-clock limits for exponential searches.
struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  /// `fallback` unless NONCYC_NODE_BUDGET holds a positive integer.
  static SearchBudget from_env(std::uint64_t fallback = 10'000'000);
};

class BudgetExhaustedError : public Error {
 public:
  BudgetExhaustedError() : Error("search budget exhausted") {}
};

/// Counts search nodes against a budget. The clock is consulted every 1024 nodes.
class BudgetCounter {
 public:
  explicit BudgetCounter(const SearchBudget& budget) : budget_(budget) {}

  /// False once the node or time limit is hit.
  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) return false;
    if (budget_.deadline && (nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > *budget_.deadline)
      expired_ = true;
    return !expired_;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  std::uint64_t nodes_ = 0;
  bool expired_ = false;
};

}  // namespace noncyc
