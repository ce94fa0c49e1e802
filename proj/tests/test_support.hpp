#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "noncyc/finite_group.hpp"
#include "noncyc/group_builder.hpp"
#include "noncyc/group_spec.hpp"
#include "noncyc/harness.hpp"
#include "noncyc/simple_graph.hpp"

namespace noncyc::testing {

inline std::string fixture(const std::string& name) { return std::string(NONCYC_FIXTURE_DIR) + "/" + name; }

inline std::shared_ptr<const FiniteGroup> make(const std::string& spec_text) {
  return std::make_shared<const FiniteGroup>(build_group(parse_spec(spec_text)));
}

/// Built catalog groups of order <= max_order, memoised across tests.
inline const std::vector<std::pair<CatalogEntry, std::shared_ptr<const FiniteGroup>>>& catalog_groups(
    std::size_t max_order) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::pair<CatalogEntry, std::shared_ptr<const FiniteGroup>>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(max_order);
  if (it != cache.end()) return it->second;
  auto& out = cache[max_order];
  for (const auto& e : default_catalog(max_order).entries)
    out.emplace_back(e, std::make_shared<const FiniteGroup>(build_group(e.spec)));
  return out;
}

/// <gens> by repeated multiplication, written independently of the library closure.
inline std::set<Element> naive_closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::set<Element> s{FiniteGroup::identity()};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> cur(s.begin(), s.end());
    for (Element a : cur)
      for (Element b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

inline std::size_t naive_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != FiniteGroup::identity(); y = g.mul(y, x)) ++k;
  return k;
}

inline bool naive_cyclic_pair(const FiniteGroup& g, Element x, Element y) {
  const auto s = naive_closure(g, {x, y});
  for (Element z : s)
    if (naive_order(g, z) == s.size()) return true;
  return false;
}

inline SimpleGraph random_graph(std::size_t m, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Maximum clique size by scanning every vertex subset (m <= 24).
inline std::size_t brute_force_clique(const SimpleGraph& g) {
  const std::size_t m = g.vertex_count();
  std::vector<std::uint32_t> adj(m, 0);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (g.adjacent(u, v)) adj[u] |= 1U << v;
  std::vector<bool> clique(std::size_t{1} << m, false);
  clique[0] = true;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    const auto lv = static_cast<std::size_t>(__builtin_ctz(low));
    clique[mask] = clique[rest] && (adj[lv] & rest) == rest;
    if (clique[mask]) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

}  // namespace noncyc::testing
