#include "noncyc/cyclicizer.hpp"

#include <algorithm>
#include <numeric>

#include "noncyc/error.hpp"

namespace noncyc {

PairCyclicity::PairCyclicity(const FiniteGroup& g) : group_(&g), subgroup_id_(g.order()) {
  for (Element x = 0; x < g.order(); ++x) {
    const std::size_t o = g.element_order(x);
    Element best = x;
    Element p = FiniteGroup::identity();
    for (std::size_t k = 0; k < o; ++k) {
      if (std::gcd(k, o) == 1) best = std::min(best, p);
      p = g.mul(p, x);
    }
    subgroup_id_[x] = best;
  }
}

bool PairCyclicity::operator()(Element x, Element y) const {
  const FiniteGroup& g = *group_;
  if (!g.commute(x, y)) return false;
  const std::size_t ox = g.element_order(x), oy = g.element_order(y);
  const std::size_t d = std::gcd(ox, oy);
  const Element xs = g.pow(x, static_cast<long long>(ox / d));
  const Element ys = g.pow(y, static_cast<long long>(oy / d));
  return subgroup_id_[xs] == subgroup_id_[ys];
}

ElementSet cyc_of_element(const FiniteGroup& g, Element x) {
  PairCyclicity cyclic(g);
  ElementSet s = g.empty_set();
  for (Element y = 0; y < g.order(); ++y)
    if (cyclic(x, y)) s.set(y);
  return s;
}

namespace {

ElementSet checked_intersection(const FiniteGroup& g, const std::vector<ElementSet>& rows) {
  ElementSet c = g.full_set();
  for (const auto& r : rows) c &= r;
  if (!is_normal_subgroup(g, c)) throw InternalError("computed cyclicizer is not a normal subgroup");
  return c;
}

std::vector<ElementSet> cyclic_rows(const FiniteGroup& g) {
  PairCyclicity cyclic(g);
  const std::size_t n = g.order();
  std::vector<ElementSet> rows(n, g.empty_set());
  for (Element x = 0; x < n; ++x) {
    rows[x].set(x);
    for (Element y = x + 1; y < n; ++y)
      if (cyclic(x, y)) {
        rows[x].set(y);
        rows[y].set(x);
      }
  }
  return rows;
}

}  // namespace

ElementSet cyclicizer(const FiniteGroup& g) { return checked_intersection(g, cyclic_rows(g)); }

Quotient quotient_by_cyclicizer(const FiniteGroup& g) {
  if (is_cyclic(g)) throw CyclicGroupError();
  return quotient_group(g, cyclicizer(g));
}

CyclicizerData CyclicizerData::compute(std::shared_ptr<const FiniteGroup> group) {
  CyclicizerData d;
  d.cyc_of = cyclic_rows(*group);
  d.cyc = checked_intersection(*group, d.cyc_of);
  d.quotient = quotient_group(*group, d.cyc);
  d.group = std::move(group);
  return d;
}

}  // namespace noncyc
