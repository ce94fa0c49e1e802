#include "noncyc/graph_algorithms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace noncyc {

SimpleGraph complement(const SimpleGraph& g) {
  const std::size_t m = g.vertex_count();
  SimpleGraph c(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  c.set_elements(g.elements());
  c.set_labels(g.labels());
  return c;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<std::size_t>& vertices) {
  const std::size_t k = vertices.size();
  SimpleGraph s(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) s.add_edge(i, j);
  if (!g.elements().empty()) {
    std::vector<Element> e(k);
    for (std::size_t i = 0; i < k; ++i) e[i] = g.elements()[vertices[i]];
    s.set_elements(std::move(e));
  }
  if (!g.labels().empty()) {
    std::vector<std::string> l(k);
    for (std::size_t i = 0; i < k; ++i) l[i] = g.labels()[vertices[i]];
    s.set_labels(std::move(l));
  }
  return s;
}

namespace {

/// Hop counts from `source`, UINT32_MAX for unreachable.
void bfs_levels(const SimpleGraph& g, std::size_t source, std::uint32_t* out, std::uint32_t inf) {
  const std::size_t m = g.vertex_count();
  std::fill(out, out + m, inf);
  Bitset visited(m), frontier(m);
  visited.set(source);
  frontier.set(source);
  out[source] = 0;
  std::uint32_t level = 0;
  while (frontier.any()) {
    ++level;
    Bitset next(m);
    frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
    next -= visited;
    next.for_each([&](std::size_t v) { out[v] = level; });
    visited |= next;
    frontier = std::move(next);
  }
}

}  // namespace

std::vector<Distance> distances_from(const SimpleGraph& g, std::size_t source) {
  std::vector<std::uint32_t> raw(g.vertex_count());
  bfs_levels(g, source, raw.data(), UINT32_MAX);
  std::vector<Distance> out;
  out.reserve(raw.size());
  for (auto d : raw) out.push_back(d == UINT32_MAX ? Distance::infinite() : Distance::finite(d));
  return out;
}

DistanceMatrix::DistanceMatrix(const SimpleGraph& g) : n_(g.vertex_count()), data_(n_ * n_) {
  for (std::size_t s = 0; s < n_; ++s) bfs_levels(g, s, data_.data() + s * n_, kInf);
}

Distance DistanceMatrix::diameter() const {
  std::uint32_t best = 0;
  for (auto d : data_) {
    if (d == kInf) return Distance::infinite();
    best = std::max(best, d);
  }
  return Distance::finite(best);
}

Distance diameter(const SimpleGraph& g) {
  const std::size_t m = g.vertex_count();
  std::vector<std::uint32_t> raw(m);
  std::uint32_t best = 0;
  for (std::size_t s = 0; s < m; ++s) {
    bfs_levels(g, s, raw.data(), UINT32_MAX);
    for (auto d : raw) {
      if (d == UINT32_MAX) return Distance::infinite();
      best = std::max(best, d);
    }
  }
  return Distance::finite(best);
}

std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g) {
  const std::size_t m = g.vertex_count();
  std::vector<std::vector<std::size_t>> comps;
  Bitset seen(m);
  for (std::size_t s = 0; s < m; ++s) {
    if (seen.test(s)) continue;
    Bitset comp(m), frontier(m);
    comp.set(s);
    frontier.set(s);
    while (frontier.any()) {
      Bitset next(m);
      frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    seen |= comp;
    comps.push_back(comp.indices());
  }
  return comps;
}

bool is_clique(const SimpleGraph& g, const std::vector<std::size_t>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
  return true;
}

namespace {

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const SimpleGraph& g, const SearchBudget& budget) : counter_(budget) {
    const std::size_t m = g.vertex_count();
    order_.resize(m);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> pos(m);
    for (std::size_t i = 0; i < m; ++i) pos[order_[i]] = i;
    adj_.assign(m, Bitset(m));
    for (std::size_t u = 0; u < m; ++u)
      g.neighbors(u).for_each([&](std::size_t v) { adj_[pos[u]].set(pos[v]); });
  }

  CliqueResult run() {
    const std::size_t m = adj_.size();
    Bitset all(m);
    all.set_all();
    std::vector<std::size_t> current;
    if (m > 0) {
      best_ = {0};
      expand(all, current);
    }
    CliqueResult r;
    r.size = best_.size();
    for (auto v : best_) r.witness.push_back(order_[v]);
    std::sort(r.witness.begin(), r.witness.end());
    r.nodes = counter_.nodes();
    return r;
  }

 private:
  void expand(Bitset cand, std::vector<std::size_t>& current) {
    if (!counter_.tick()) throw BudgetExhaustedError();
    // Greedy colouring in index order; colour classes are independent sets,
    // so current + colour(v) bounds any clique through v and earlier vertices.
    std::vector<std::size_t> verts, colours;
    Bitset uncoloured = cand;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset q = uncoloured;
      while (q.any()) {
        std::size_t v = q.find_first();
        q.reset(v);
        uncoloured.reset(v);
        q -= adj_[v];
        verts.push_back(v);
        colours.push_back(colour);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + colours[i] <= best_.size()) return;
      const std::size_t v = verts[i];
      current.push_back(v);
      Bitset next = cand & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(std::move(next), current);
      }
      current.pop_back();
      cand.reset(v);
    }
  }

  BudgetCounter counter_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> best_;
};

}  // namespace

CliqueResult clique_number(const SimpleGraph& g, const SearchBudget& budget) {
  auto r = MaxCliqueSearch(g, budget).run();
  if (!is_clique(g, r.witness)) throw InternalError("clique witness failed verification");
  return r;
}

bool is_dominating_set(const SimpleGraph& g, const std::vector<std::size_t>& set) {
  Bitset covered(g.vertex_count());
  for (auto v : set) {
    covered |= g.neighbors(v);
    covered.set(v);
  }
  return covered.all();
}

namespace {

class DominationSearch {
 public:
  DominationSearch(const SimpleGraph& g, const SearchBudget& budget) : g_(g), counter_(budget) {
    const std::size_t m = g.vertex_count();
    closed_.reserve(m);
    for (std::size_t v = 0; v < m; ++v) {
      closed_.push_back(g.neighbors(v));
      closed_.back().set(v);
    }
  }

  bool search(const Bitset& covered, std::size_t k_left, std::vector<std::size_t>& chosen) {
    if (!counter_.tick()) throw BudgetExhaustedError();
    if (covered.all()) return true;
    if (k_left == 0) return false;
    const Bitset uncovered = ~covered;
    if (k_left == 1) {
      // One vertex must dominate every remaining vertex.
      Bitset common(g_.vertex_count());
      common.set_all();
      uncovered.for_each([&](std::size_t u) { common &= closed_[u]; });
      if (common.none()) return false;
      chosen.push_back(common.find_first());
      return true;
    }
    // Branch on the undominated vertex with the fewest possible dominators.
    std::size_t pick = uncovered.find_first();
    std::size_t fewest = closed_[pick].count();
    uncovered.for_each([&](std::size_t u) {
      auto c = closed_[u].count();
      if (c < fewest) {
        fewest = c;
        pick = u;
      }
    });
    bool found = false;
    closed_[pick].for_each([&](std::size_t v) {
      if (found) return;
      chosen.push_back(v);
      if (search(covered | closed_[v], k_left - 1, chosen)) {
        found = true;
        return;
      }
      chosen.pop_back();
    });
    return found;
  }

 private:
  const SimpleGraph& g_;
  BudgetCounter counter_;
  std::vector<Bitset> closed_;
};

}  // namespace

DominationResult domination_number_bounded(const SimpleGraph& g, std::size_t cap, const SearchBudget& budget) {
  DominationResult r;
  DominationSearch search(g, budget);
  try {
    for (std::size_t k = 1; k <= cap; ++k) {
      std::vector<std::size_t> chosen;
      if (search.search(Bitset(g.vertex_count()), k, chosen)) {
        std::sort(chosen.begin(), chosen.end());
        chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
        if (!is_dominating_set(g, chosen) || chosen.size() > k)
          throw InternalError("dominating set witness failed verification");
        r.status = DominationResult::Status::kFound;
        r.value = chosen.size();
        r.witness = std::move(chosen);
        return r;
      }
    }
  } catch (const BudgetExhaustedError&) {
    r.status = DominationResult::Status::kTimeout;
    return r;
  }
  r.status = DominationResult::Status::kExceedsCap;
  return r;
}

bool is_hamilton_cycle(const SimpleGraph& g, const std::vector<std::size_t>& cycle) {
  const std::size_t m = g.vertex_count();
  if (m < 3 || cycle.size() != m) return false;
  Bitset seen(m);
  for (auto v : cycle) {
    if (v >= m || seen.test(v)) return false;
    seen.set(v);
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % m])) return false;
  return true;
}

bool satisfies_ore(const SimpleGraph& g) {
  const std::size_t m = g.vertex_count();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      if (!g.adjacent(u, v) && g.degree(u) + g.degree(v) < m) return false;
  return true;
}

namespace {

/// Palmer's rotation algorithm: repeatedly closes a gap (v0, v1) by reversing
/// v1..vj where v0~vj and v1~vj+1. Terminates with a Hamilton cycle under Ore.
std::optional<std::vector<std::size_t>> palmer_cycle(const SimpleGraph& g) {
  const std::size_t m = g.vertex_count();
  std::vector<std::size_t> seq(m);
  std::iota(seq.begin(), seq.end(), 0);
  for (std::size_t guard = 0; guard <= m; ++guard) {
    std::optional<std::size_t> gap;
    for (std::size_t i = 0; i < m; ++i)
      if (!g.adjacent(seq[i], seq[(i + 1) % m])) {
        gap = i;
        break;
      }
    if (!gap) return seq;
    std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(*gap), seq.end());
    std::optional<std::size_t> pick;
    for (std::size_t j = 2; j + 1 < m; ++j)
      if (g.adjacent(seq[0], seq[j]) && g.adjacent(seq[1], seq[j + 1])) {
        pick = j;
        break;
      }
    if (!pick) return std::nullopt;
    std::reverse(seq.begin() + 1, seq.begin() + static_cast<std::ptrdiff_t>(*pick) + 1);
  }
  return std::nullopt;
}

class HamiltonSearch {
 public:
  HamiltonSearch(const SimpleGraph& g, const SearchBudget& budget)
      : g_(g), m_(g.vertex_count()), counter_(budget), unvisited_(m_), twin_(m_) {
    // Twins (equal open or equal closed neighbourhoods) are swapped by an
    // automorphism, so only one unvisited member of a class needs trying.
    std::unordered_map<Bitset, std::size_t, BitsetHash> open, closed;
    for (std::size_t v = 0; v < m_; ++v) {
      Bitset row = g_.neighbors(v);
      auto [it, fresh] = open.emplace(row, v);
      if (!fresh) {
        twin_[v] = it->second;
        independent_classes_[it->second].set(v);
        continue;
      }
      row.set(v);
      auto [jt, fresh2] = closed.emplace(row, v);
      twin_[v] = jt->second;
      if (fresh2) {
        Bitset members(m_);
        members.set(v);
        independent_classes_.emplace(v, std::move(members));
      }
    }
    for (auto it = independent_classes_.begin(); it != independent_classes_.end();)
      it = it->second.count() < 2 ? independent_classes_.erase(it) : std::next(it);
  }

  HamiltonResult run() {
    HamiltonResult r;
    // Start at a minimum-degree vertex.
    std::size_t start = 0;
    for (std::size_t v = 1; v < m_; ++v)
      if (g_.degree(v) < g_.degree(start)) start = v;
    start_ = start;
    unvisited_.set_all();
    unvisited_.reset(start);
    path_.push_back(start);
    try {
      if (extend(start)) {
        r.status = HamiltonResult::Status::kFound;
        r.cycle = path_;
      } else {
        r.status = HamiltonResult::Status::kNone;
      }
    } catch (const BudgetExhaustedError&) {
      r.status = HamiltonResult::Status::kTimeout;
    }
    return r;
  }

 private:
  bool extend(std::size_t v) {
    if (!counter_.tick()) throw BudgetExhaustedError();
    if (unvisited_.none()) return g_.adjacent(v, start_);
    if (!feasible(v)) return false;
    std::vector<std::pair<std::size_t, std::size_t>> next;
    (g_.neighbors(v) & unvisited_).for_each([&](std::size_t w) {
      next.emplace_back(g_.neighbors(w).intersection_count(unvisited_), w);
    });
    std::sort(next.begin(), next.end());
    std::vector<std::size_t> tried_classes;
    for (auto [_, w] : next) {
      if (std::find(tried_classes.begin(), tried_classes.end(), twin_[w]) != tried_classes.end()) continue;
      tried_classes.push_back(twin_[w]);
      unvisited_.reset(w);
      path_.push_back(w);
      if (extend(w)) return true;
      path_.pop_back();
      unvisited_.set(w);
    }
    return false;
  }

  /// Every unvisited vertex needs two usable neighbours, and the unvisited
  /// vertices must be reachable from the path end.
  bool feasible(std::size_t end) const {
    // The cycle closes through an unvisited neighbour of the start.
    if (!g_.neighbors(start_).intersects(unvisited_)) return false;
    Bitset usable = unvisited_;
    usable.set(end);
    usable.set(start_);
    bool ok = true;
    unvisited_.for_each([&](std::size_t w) {
      if (ok && g_.neighbors(w).intersection_count(usable) < 2) ok = false;
    });
    if (!ok) return false;
    // t unvisited members of an independent twin class need t+1 distinct
    // flanking vertices on the remaining path (t on a closed cycle).
    for (const auto& [rep, members] : independent_classes_) {
      const std::size_t t = members.intersection_count(unvisited_);
      if (t < 2) continue;
      const std::size_t flanks = g_.neighbors(rep).intersection_count(usable);
      if (flanks < t + (end != start_ ? 1 : 0)) return false;
    }
    Bitset reach(m_), frontier(m_);
    reach.set(end);
    frontier.set(end);
    Bitset region = unvisited_;
    region.set(end);
    while (frontier.any()) {
      Bitset next(m_);
      frontier.for_each([&](std::size_t x) { next |= g_.neighbors(x); });
      next &= region;
      next -= reach;
      reach |= next;
      frontier = std::move(next);
    }
    return unvisited_.is_subset_of(reach);
  }

  const SimpleGraph& g_;
  std::size_t m_;
  BudgetCounter counter_;
  Bitset unvisited_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
  std::vector<std::size_t> twin_;
  /// Classes of pairwise non-adjacent twins with at least two members, keyed by representative.
  std::map<std::size_t, Bitset> independent_classes_;
};

}  // namespace

HamiltonResult hamiltonian_cycle(const SimpleGraph& g, const SearchBudget& budget) {
  const std::size_t m = g.vertex_count();
  if (m < 3) throw Error("Hamilton cycle search needs at least 3 vertices");
  HamiltonResult r;
  if (satisfies_ore(g)) {
    if (auto c = palmer_cycle(g)) {
      r.status = HamiltonResult::Status::kFound;
      r.cycle = std::move(*c);
    }
  }
  if (r.status != HamiltonResult::Status::kFound) r = HamiltonSearch(g, budget).run();
  if (r.status == HamiltonResult::Status::kFound && !is_hamilton_cycle(g, r.cycle))
    throw InternalError("Hamilton cycle witness failed verification");
  return r;
}

}  // namespace noncyc
