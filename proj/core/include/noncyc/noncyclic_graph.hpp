#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <vector>

#include "noncyc/cyclicizer.hpp"
#include "noncyc/finite_group.hpp"
#include "noncyc/graph_algorithms.hpp"
#include "noncyc/simple_graph.hpp"

namespace noncyc {

inline constexpr std::size_t kNoVertex = std::numeric_limits<std::size_t>::max();

/// The non-cyclic graph of a group, its complement (the cyclic graph) and
/// the non-commuting graph, built once from the cached relation matrices.
struct GroupGraphBundle {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const CyclicizerData> cyclicizer;
  ElementSet center;

  /// On G \ Cyc(G); u~v iff <u, v> is not cyclic.
  SimpleGraph noncyclic;
  /// Complement of `noncyclic` on the same vertices.
  SimpleGraph cyclic_graph;
  /// On G \ Z(G); u~v iff uv != vu.
  SimpleGraph noncommuting;

  /// element -> vertex of `noncyclic` / `cyclic_graph`, kNoVertex for Cyc(G).
  std::vector<std::size_t> vertex_of;
  /// element -> vertex of `noncommuting`, kNoVertex for Z(G).
  std::vector<std::size_t> noncommuting_vertex_of;

  const FiniteGroup& g() const { return *group; }
  const CyclicizerData& cyc() const { return *cyclicizer; }
};

/// Throws CyclicGroupError when the group is cyclic.
GroupGraphBundle build_bundle(std::shared_ptr<const FiniteGroup> group);
GroupGraphBundle build_bundle(std::shared_ptr<const FiniteGroup> group, std::shared_ptr<const CyclicizerData> data);

/// Number of maximal cyclic subgroups: one generator from each of them forms
/// a maximum clique of the non-cyclic graph. Throws CyclicGroupError.
std::size_t clique_number_via_maximal_cyclic(const FiniteGroup& g);

/// One generator (the smallest index) per maximal cyclic subgroup.
std::vector<Element> maximal_cyclic_generators(const FiniteGroup& g);

}  // namespace noncyc
