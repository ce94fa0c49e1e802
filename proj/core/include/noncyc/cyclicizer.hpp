#pragma once

#include <memory>
#include <vector>

#include "noncyc/finite_group.hpp"
#include "noncyc/group_ops.hpp"

namespace noncyc {

/// Constant-time test of whether <x, y> is cyclic after O(n log n) setup.
///
/// Non-commuting pairs never generate a cyclic group. For commuting x, y the
/// group <x, y> is abelian of exponent lcm(o(x), o(y)), so it is cyclic iff
/// <x> and <y> meet in a subgroup of order gcd(o(x), o(y)), i.e. iff their
/// unique subgroups of that order coincide.
class PairCyclicity {
 public:
  explicit PairCyclicity(const FiniteGroup& g);
  bool operator()(Element x, Element y) const;

 private:
  const FiniteGroup* group_;
  std::vector<Element> subgroup_id_;
};

/// Cyc_G(x) = { y : <x, y> is cyclic }. Not a subgroup in general.
ElementSet cyc_of_element(const FiniteGroup& g, Element x);

/// Cyc(G) = { x : <x, y> is cyclic for every y }; checked to be a normal subgroup.
ElementSet cyclicizer(const FiniteGroup& g);

/// G / Cyc(G). Throws CyclicGroupError for cyclic G.
Quotient quotient_by_cyclicizer(const FiniteGroup& g);

/// Everything the graph layer needs about cyclic generation in one group,
/// computed once. Immutable.
struct CyclicizerData {
  std::shared_ptr<const FiniteGroup> group;
  /// cyc_of[x] = Cyc_G(x); also the adjacency of the cyclic-generation relation.
  std::vector<ElementSet> cyc_of;
  ElementSet cyc;
  /// G / Cyc(G) with projection; the trivial group when G is cyclic.
  Quotient quotient;

  static CyclicizerData compute(std::shared_ptr<const FiniteGroup> group);

  bool generates_cyclic(Element x, Element y) const { return cyc_of[x].test(y); }
};

}  // namespace noncyc
