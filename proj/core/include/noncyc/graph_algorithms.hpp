#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "noncyc/search_budget.hpp"
#include "noncyc/simple_graph.hpp"

namespace noncyc {

/// Same vertex set; u~v iff u != v and not adjacent in g. Element map and labels carry over.
SimpleGraph complement(const SimpleGraph& g);

/// Subgraph induced on `vertices` (in the given order), relabelled 0..k-1.
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<std::size_t>& vertices);

/// BFS distances from one source.
std::vector<Distance> distances_from(const SimpleGraph& g, std::size_t source);

/// All-pairs hop distances.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const SimpleGraph& g);
  Distance at(std::size_t u, std::size_t v) const {
    auto d = data_[u * n_ + v];
    return d == kInf ? Distance::infinite() : Distance::finite(d);
  }
  std::size_t size() const { return n_; }
  /// Maximum over all ordered pairs; finite(0) for a single vertex.
  Distance diameter() const;

 private:
  static constexpr std::uint32_t kInf = UINT32_MAX;
  std::size_t n_;
  std::vector<std::uint32_t> data_;
};

/// Infinite iff disconnected. Precondition: at least one vertex.
Distance diameter(const SimpleGraph& g);

/// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g);

struct CliqueResult {
  std::size_t size = 0;
  /// Sorted vertices of a maximum clique, verified pairwise adjacent.
  std::vector<std::size_t> witness;
  std::uint64_t nodes = 0;
};

/// Exact maximum clique: branch and bound over bitsets with greedy colouring
/// bounds, vertices pre-ordered by descending degree (ties by index).
/// Throws BudgetExhaustedError when the node budget runs out.
CliqueResult clique_number(const SimpleGraph& g, const SearchBudget& budget = {});

bool is_clique(const SimpleGraph& g, const std::vector<std::size_t>& vertices);

struct DominationResult {
  enum class Status { kFound, kExceedsCap, kTimeout };
  Status status = Status::kExceedsCap;
  /// Smallest dominating set size when status is kFound.
  std::optional<std::size_t> value;
  std::vector<std::size_t> witness;
};

/// Smallest k <= cap with a dominating k-set, trying k = 1, 2, ... in turn.
/// Each size is searched exhaustively by branching on the closed
/// neighbourhood of the undominated vertex with the fewest dominators.
DominationResult domination_number_bounded(const SimpleGraph& g, std::size_t cap, const SearchBudget& budget = {});

bool is_dominating_set(const SimpleGraph& g, const std::vector<std::size_t>& set);

struct HamiltonResult {
  enum class Status { kFound, kNone, kTimeout };
  Status status = Status::kNone;
  std::vector<std::size_t> cycle;
};

/// Hamilton cycle search. When every non-adjacent pair has degree sum >= m
/// (Ore, implied by Dirac) a cycle is produced constructively by rotations;
/// otherwise backtracking with degree and connectivity pruning under the budget.
/// Precondition: m >= 3.
HamiltonResult hamiltonian_cycle(const SimpleGraph& g, const SearchBudget& budget = {});

bool is_hamilton_cycle(const SimpleGraph& g, const std::vector<std::size_t>& cycle);

/// Ore's degree-sum condition (deg u + deg v >= m for non-adjacent u != v).
bool satisfies_ore(const SimpleGraph& g);

}  // namespace noncyc
