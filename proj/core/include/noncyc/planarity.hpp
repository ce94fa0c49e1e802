#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noncyc/simple_graph.hpp"

namespace noncyc {

enum class Obstruction { kK5, kK33 };

struct PlanarityResult {
  bool planar = false;
  /// |E| > 3m - 6 fired before the full test.
  bool euler_bound_rejected = false;
  /// Planar: cyclic neighbour order around every vertex.
  std::vector<std::vector<std::size_t>> rotation;
  /// Non-planar: edges of a subdivision of K5 or K3,3.
  std::vector<std::pair<std::size_t, std::size_t>> kuratowski_edges;
  std::optional<Obstruction> obstruction;

  std::string describe() const;
};

/// Exact planarity decision with a mandatory certificate. The decision comes
/// from an edge-addition (Boyer–Myrvold) test; certificates are re-checked here
/// and a failed check raises InternalError.
PlanarityResult is_planar(const SimpleGraph& g);

/// Whether `rotation` is a planar rotation system of g (faces traced from the
/// rotation satisfy Euler's formula in every component).
bool verify_rotation_system(const SimpleGraph& g, const std::vector<std::vector<std::size_t>>& rotation);

/// Classifies `edges` (all of which must be edges of g) as a subdivision of K5
/// or K3,3 by contracting degree-2 paths; nullopt when it is neither.
std::optional<Obstruction> classify_kuratowski(const SimpleGraph& g,
                                               const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace noncyc
