#include "noncyc/planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <iterator>
#include <map>
#include <set>

#include "noncyc/error.hpp"
#include "noncyc/graph_algorithms.hpp"

namespace noncyc {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const SimpleGraph& g) {
  BoostGraph bg(g.vertex_count());
  int idx = 0;
  for (auto [u, v] : g.edges()) {
    auto e = boost::add_edge(u, v, bg).first;
    boost::put(boost::edge_index, bg, e, idx++);
  }
  return bg;
}

bool boost_planar(const SimpleGraph& g) {
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool boost_embed(const SimpleGraph& g, std::vector<std::vector<std::size_t>>& rotation) {
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> embedding(boost::num_vertices(bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) return false;
  rotation.assign(g.vertex_count(), {});
  for (std::size_t v = 0; v < embedding.size(); ++v)
    for (const auto& e : embedding[v]) {
      std::size_t s = boost::source(e, bg), t = boost::target(e, bg);
      rotation[v].push_back(s == v ? t : s);
    }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> boost_kuratowski(const SimpleGraph& g) {
  BoostGraph bg = to_boost(g);
  std::vector<BoostEdge> kur;
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                    boost::boyer_myrvold_params::kuratowski_subgraph =
                                                        std::back_inserter(kur));
  if (planar) throw InternalError("expected a non-planar graph");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : kur) {
    std::size_t s = boost::source(e, bg), t = boost::target(e, bg);
    out.emplace_back(std::min(s, t), std::max(s, t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Boost can report the obstruction with pendant paths attached; peel them off.
void prune_pendants(std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  while (true) {
    std::map<std::size_t, std::size_t> deg;
    for (auto [u, v] : edges) ++deg[u], ++deg[v];
    auto end = std::remove_if(edges.begin(), edges.end(),
                              [&](const auto& e) { return deg[e.first] == 1 || deg[e.second] == 1; });
    if (end == edges.end()) return;
    edges.erase(end, edges.end());
  }
}

/// Deletes every edge whose removal keeps the graph non-planar. What remains
/// is edge-minimal non-planar, hence a Kuratowski subdivision.
void minimize_nonplanar(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  for (std::size_t i = edges.size(); i-- > 0;) {
    auto trial = edges;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!boost_planar(SimpleGraph::from_edges(vertices, trial))) edges = std::move(trial);
  }
  prune_pendants(edges);
}

std::vector<std::size_t> prefix(std::size_t k) {
  std::vector<std::size_t> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = i;
  return v;
}

}  // namespace

std::string PlanarityResult::describe() const {
  if (planar) return "planar (rotation system verified)";
  std::string kind = obstruction == Obstruction::kK5 ? "K5" : "K3,3";
  return "non-planar: subdivision of " + kind + " on " + std::to_string(kuratowski_edges.size()) + " edges" +
         (euler_bound_rejected ? " (edge count above 3m-6)" : "");
}

PlanarityResult is_planar(const SimpleGraph& g) {
  const std::size_t m = g.vertex_count();
  PlanarityResult r;
  r.euler_bound_rejected = m >= 3 && g.edge_count() > 3 * m - 6;
  if (!r.euler_bound_rejected && boost_embed(g, r.rotation)) {
    if (!verify_rotation_system(g, r.rotation)) throw InternalError("planar embedding failed verification");
    r.planar = true;
    return r;
  }
  // Isolate a small non-planar prefix of the vertex order before extracting
  // the obstruction: doubling, then bisection on the prefix length.
  std::size_t hi = std::min<std::size_t>(5, m);
  while (hi < m && boost_planar(induced_subgraph(g, prefix(hi)))) hi = std::min(m, hi * 2);
  std::size_t lo = hi / 2;  // prefix of length lo is planar (or trivially small)
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (boost_planar(induced_subgraph(g, prefix(mid))))
      lo = mid;
    else
      hi = mid;
  }
  r.kuratowski_edges = boost_kuratowski(induced_subgraph(g, prefix(hi)));
  prune_pendants(r.kuratowski_edges);
  r.obstruction = classify_kuratowski(g, r.kuratowski_edges);
  if (!r.obstruction) {
    minimize_nonplanar(hi, r.kuratowski_edges);
    r.obstruction = classify_kuratowski(g, r.kuratowski_edges);
  }
  if (!r.obstruction) throw InternalError("Kuratowski certificate failed verification");
  return r;
}

bool verify_rotation_system(const SimpleGraph& g, const std::vector<std::vector<std::size_t>>& rotation) {
  const std::size_t m = g.vertex_count();
  if (rotation.size() != m) return false;
  // position of w in rotation[v]
  std::vector<std::map<std::size_t, std::size_t>> pos(m);
  for (std::size_t v = 0; v < m; ++v) {
    if (rotation[v].size() != g.degree(v)) return false;
    for (std::size_t i = 0; i < rotation[v].size(); ++i) {
      std::size_t w = rotation[v][i];
      if (w >= m || !g.adjacent(v, w) || !pos[v].emplace(w, i).second) return false;
    }
  }
  // Trace faces: dart (u, v) is followed by (v, w) with w after u around v.
  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<std::size_t> faces_in(m, 0);
  const auto comps = connected_components(g);
  std::vector<std::size_t> comp_of(m);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;
  std::vector<std::size_t> faces(comps.size(), 0);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v : rotation[u]) {
      if (used.count({u, v})) continue;
      ++faces[comp_of[u]];
      std::size_t a = u, b = v;
      while (used.insert({a, b}).second) {
        const auto& rot = rotation[b];
        std::size_t next = rot[(pos[b].at(a) + 1) % rot.size()];
        a = b;
        b = next;
      }
    }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::size_t verts = comps[c].size(), edges = 0;
    for (auto v : comps[c]) edges += g.degree(v);
    edges /= 2;
    if (edges == 0) continue;
    if (verts + faces[c] != edges + 2) return false;
  }
  return true;
}

std::optional<Obstruction> classify_kuratowski(const SimpleGraph& g,
                                               const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::map<std::size_t, std::vector<std::size_t>> adj;
  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  for (auto [u, v] : edges) {
    if (u == v || u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v)) return std::nullopt;
    if (!edge_set.insert({std::min(u, v), std::max(u, v)}).second) return std::nullopt;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::size_t> branch;
  for (const auto& [v, nb] : adj) {
    if (nb.size() == 1 || nb.size() > 4) return std::nullopt;
    if (nb.size() >= 3) branch.push_back(v);
  }
  // Contract each degree-2 path between branch vertices.
  std::set<std::pair<std::size_t, std::size_t>> walked;
  std::map<std::pair<std::size_t, std::size_t>, int> contracted;
  for (auto b : branch)
    for (auto first : adj[b]) {
      std::size_t prev = b, cur = first;
      if (walked.count({std::min(prev, cur), std::max(prev, cur)})) continue;
      while (true) {
        walked.insert({std::min(prev, cur), std::max(prev, cur)});
        if (adj[cur].size() != 2) break;
        std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
      if (cur == b) return std::nullopt;
      ++contracted[{std::min(b, cur), std::max(b, cur)}];
    }
  if (walked.size() != edge_set.size()) return std::nullopt;  // stray cycles
  for (const auto& [pair, count] : contracted)
    if (count != 1) return std::nullopt;

  auto all_degree = [&](std::size_t d) {
    return std::all_of(branch.begin(), branch.end(), [&](std::size_t v) { return adj[v].size() == d; });
  };
  if (branch.size() == 5 && all_degree(4) && contracted.size() == 10) return Obstruction::kK5;
  if (branch.size() == 6 && all_degree(3) && contracted.size() == 9) {
    // Two-colour the contracted graph; K3,3 is the unique simple cubic bipartite graph on 6 vertices.
    std::map<std::size_t, int> side{{branch[0], 0}};
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [pair, c] : contracted) {
        auto [a, b] = pair;
        if (side.count(a) && !side.count(b)) side[b] = 1 - side[a], changed = true;
        if (side.count(b) && !side.count(a)) side[a] = 1 - side[b], changed = true;
        if (side.count(a) && side.count(b) && side[a] == side[b]) return std::nullopt;
      }
    }
    if (side.size() != 6) return std::nullopt;
    return Obstruction::kK33;
  }
  return std::nullopt;
}

}  // namespace noncyc
