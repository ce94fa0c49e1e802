#include "noncyc/group_ops.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "noncyc/error.hpp"
#include "noncyc/number_theory.hpp"

namespace noncyc {

namespace {

/// Closure of an explicit generator list by breadth-first right multiplication.
ElementSet close(const FiniteGroup& g, const std::vector<Element>& gens) {
  ElementSet s = g.empty_set();
  std::vector<Element> queue{FiniteGroup::identity()};
  s.set(FiniteGroup::identity());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (Element gen : gens) {
      Element p = g.mul(queue[k], gen);
      if (!s.test(p)) {
        s.set(p);
        queue.push_back(p);
      }
    }
  }
  return s;
}

bool is_power_of(std::size_t n, std::size_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::size_t element_order(const FiniteGroup& g, Element x) { return g.element_order(x); }

ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seed) {
  // Generators are added only when they fall outside the current closure;
  // each addition at least doubles the subgroup.
  std::vector<Element> gens;
  ElementSet h = g.empty_set();
  h.set(FiniteGroup::identity());
  seed.for_each([&](std::size_t x) {
    if (h.test(x)) return;
    gens.push_back(static_cast<Element>(x));
    h = close(g, gens);
  });
  return h;
}

ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Element> generators) {
  ElementSet seed = g.empty_set();
  for (Element x : generators) seed.set(x);
  return subgroup_closure(g, seed);
}

ElementSet cyclic_subgroup(const FiniteGroup& g, Element x) {
  ElementSet s = g.empty_set();
  Element p = FiniteGroup::identity();
  do {
    s.set(p);
    p = g.mul(p, x);
  } while (p != FiniteGroup::identity());
  return s;
}

bool is_cyclic_subgroup(const FiniteGroup& g, const ElementSet& subgroup) {
  const std::size_t size = subgroup.count();
  bool found = false;
  subgroup.for_each([&](std::size_t x) {
    if (g.element_order(static_cast<Element>(x)) == size) found = true;
  });
  return found;
}

bool is_cyclic(const FiniteGroup& g) { return is_cyclic_subgroup(g, g.full_set()); }

bool pair_generates_cyclic(const FiniteGroup& g, Element x, Element y) {
  const Element gens[] = {x, y};
  return is_cyclic_subgroup(g, subgroup_closure(g, gens));
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.size() != g.order() || !s.test(FiniteGroup::identity())) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    if (!ok) return;
    s.for_each([&](std::size_t b) {
      if (ok && !s.test(g.mul(static_cast<Element>(a), static_cast<Element>(b)))) ok = false;
    });
  });
  return ok;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    s.for_each([&](std::size_t a) {
      if (ok && !s.test(g.conj(static_cast<Element>(a), x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z = g.empty_set();
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.commute(x, y);
    if (central) z.set(x);
  }
  return z;
}

ElementSet centralizer(const FiniteGroup& g, Element x) {
  ElementSet c = g.empty_set();
  for (Element y = 0; y < g.order(); ++y)
    if (g.commute(x, y)) c.set(y);
  return c;
}

ElementSet normalizer(const FiniteGroup& g, const ElementSet& subgroup) {
  ElementSet n = g.empty_set();
  const auto members = subgroup.indices();
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto a : members)
      if (!subgroup.test(g.conj(static_cast<Element>(a), x))) {
        ok = false;
        break;
      }
    if (ok) n.set(x);
  }
  return n;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Element>> classes;
  ElementSet assigned = g.empty_set();
  for (Element x = 0; x < g.order(); ++x) {
    if (assigned.test(x)) continue;
    ElementSet cls = g.empty_set();
    for (Element y = 0; y < g.order(); ++y) cls.set(g.conj(x, y));
    assigned |= cls;
    std::vector<Element> members;
    cls.for_each([&](std::size_t e) { members.push_back(static_cast<Element>(e)); });
    classes.push_back(std::move(members));
  }
  return classes;
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, const NormalSubgroupOptions& options) {
  const auto classes = conjugacy_classes(g);
  if (classes.size() > options.max_classes)
    throw CapExceededError(std::to_string(classes.size()) + " conjugacy classes exceed the cap of " +
                           std::to_string(options.max_classes));

  // Normal closures of single classes; every normal subgroup is a join of these.
  std::vector<ElementSet> atoms;
  std::unordered_set<Bitset, BitsetHash> atom_seen;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    auto k = subgroup_closure(g, std::span<const Element>(classes[c]));
    if (atom_seen.insert(k).second) atoms.push_back(std::move(k));
  }

  ElementSet trivial = g.empty_set();
  trivial.set(FiniteGroup::identity());
  std::vector<ElementSet> found{trivial};
  std::unordered_set<Bitset, BitsetHash> seen{trivial};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& atom : atoms) {
      if (atom.is_subset_of(found[i])) continue;
      auto joined = subgroup_closure(g, found[i] | atom);
      if (seen.insert(joined).second) found.push_back(std::move(joined));
    }
  }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.indices() < b.indices();
  });
  return found;
}

Quotient quotient_group(const FiniteGroup& g, const ElementSet& normal) {
  if (!is_normal_subgroup(g, normal)) throw ValidationError("quotient requires a normal subgroup");
  const auto members = normal.indices();
  Quotient q;
  q.projection.assign(g.order(), 0);
  ElementSet assigned = g.empty_set();
  for (Element x = 0; x < g.order(); ++x) {
    if (assigned.test(x)) continue;
    const auto idx = static_cast<Element>(q.representatives.size());
    q.representatives.push_back(x);
    for (auto n : members) {
      Element y = g.mul(x, static_cast<Element>(n));
      assigned.set(y);
      q.projection[y] = idx;
    }
  }
  const std::size_t k = q.representatives.size();
  std::vector<Element> table(k * k);
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = members.size() == 1 ? g.name(q.representatives[i]) : g.name(q.representatives[i]) + "N";
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = q.projection[g.mul(q.representatives[i], q.representatives[j])];
  }
  q.group = FiniteGroup::from_table(k, std::move(table), std::move(names), FiniteGroup::Validation::kStructural);
  return q;
}

std::size_t nu_p(const FiniteGroup& g, std::size_t p) {
  std::size_t count = 0;
  for (auto o : g.element_orders())
    if (o == p) ++count;
  return p > 1 ? count / (p - 1) : 0;
}

std::vector<ElementSet> maximal_cyclic_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  // Canonical id of <x>: its smallest generator.
  std::vector<Element> id(n, 0);
  for (Element x = 0; x < n; ++x) {
    const std::size_t o = g.element_order(x);
    Element best = x;
    Element p = FiniteGroup::identity();
    for (std::size_t k = 0; k < o; ++k) {
      if (std::gcd(k, o) == 1) best = std::min(best, p);
      p = g.mul(p, x);
    }
    id[x] = best;
  }
  std::vector<bool> is_rep(n, false), maximal(n, false);
  for (Element x = 0; x < n; ++x) is_rep[id[x]] = true;
  for (Element r = 0; r < n; ++r) maximal[r] = is_rep[r];
  for (Element r = 0; r < n; ++r) {
    if (!is_rep[r]) continue;
    Element p = FiniteGroup::identity();
    do {
      if (id[p] != r) maximal[id[p]] = false;
      p = g.mul(p, r);
    } while (p != FiniteGroup::identity());
  }
  std::vector<ElementSet> out;
  for (Element r = 0; r < n; ++r)
    if (maximal[r]) out.push_back(cyclic_subgroup(g, r));
  return out;
}

std::string_view to_string(SmallQuotientTag tag) {
  switch (tag) {
    case SmallQuotientTag::kZ2xZ2:
      return "Z2xZ2";
    case SmallQuotientTag::kZ3xZ3:
      return "Z3xZ3";
    case SmallQuotientTag::kS3:
      return "S3";
    case SmallQuotientTag::kOther:
      break;
  }
  return "other";
}

SmallQuotientTag identify_small_quotient(const FiniteGroup& g) {
  if (g.order() == 4 && g.exponent() == 2) return SmallQuotientTag::kZ2xZ2;
  if (g.order() == 9 && g.exponent() == 3) return SmallQuotientTag::kZ3xZ3;
  if (g.order() == 6 && !g.is_abelian()) return SmallQuotientTag::kS3;
  return SmallQuotientTag::kOther;
}

bool is_p_group(const FiniteGroup& g, const ElementSet& s, std::size_t p) {
  bool ok = true;
  s.for_each([&](std::size_t x) {
    if (!is_power_of(g.element_order(static_cast<Element>(x)), p)) ok = false;
  });
  return ok;
}

ElementSet sylow_subgroup(const FiniteGroup& g, std::size_t p) {
  const std::size_t target = p_part(g.order(), p);
  ElementSet sub = g.empty_set();
  sub.set(FiniteGroup::identity());
  if (target == 1) return sub;
  while (sub.count() < target) {
    // An element outside sub whose p-th power lands in sub, taken from the
    // normalizer, extends sub by a factor of p.
    const ElementSet norm = normalizer(g, sub);
    std::optional<Element> ext;
    norm.for_each([&](std::size_t y) {
      if (ext || sub.test(y)) return;
      if (sub.test(g.pow(static_cast<Element>(y), static_cast<long long>(p)))) ext = static_cast<Element>(y);
    });
    if (!ext) throw InternalError("Sylow growth stalled");
    sub.set(*ext);
    sub = subgroup_closure(g, sub);
  }
  if (sub.count() != target) throw InternalError("Sylow subgroup overshot");
  return sub;
}

std::size_t sylow_count(const FiniteGroup& g, std::size_t p) {
  return g.order() / normalizer(g, sylow_subgroup(g, p)).count();
}

}  // namespace noncyc
