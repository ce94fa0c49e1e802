#include "noncyc/simple_graph.hpp"

namespace noncyc {

SimpleGraph::SimpleGraph(std::size_t vertices) : adj_(vertices, Bitset(vertices)) {}

SimpleGraph SimpleGraph::from_edges(std::size_t vertices,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  SimpleGraph g(vertices);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::complete(std::size_t vertices) {
  SimpleGraph g(vertices);
  for (std::size_t u = 0; u < vertices; ++u)
    for (std::size_t v = u + 1; v < vertices; ++v) g.add_edge(u, v);
  return g;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adj_[u].set(v);
  adj_[v].set(u);
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v) {
  adj_[u].reset(v);
  adj_[v].reset(u);
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u)
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool SimpleGraph::well_formed() const {
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    if (adj_[u].test(u)) return false;
    bool sym = true;
    adj_[u].for_each([&](std::size_t v) { sym = sym && adj_[v].test(u); });
    if (!sym) return false;
  }
  return true;
}

}  // namespace noncyc
