#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "noncyc/finite_group.hpp"

namespace noncyc {

std::size_t element_order(const FiniteGroup& g, Element x);

/// Smallest subgroup containing `seed`. Seed must be nonempty.
ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seed);
ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Element> generators);

/// <x> as a set.
ElementSet cyclic_subgroup(const FiniteGroup& g, Element x);

/// A finite group is cyclic iff it has an element whose order is the group order.
bool is_cyclic_subgroup(const FiniteGroup& g, const ElementSet& subgroup);
bool is_cyclic(const FiniteGroup& g);

/// Whether <x, y> is cyclic, by closure and maximum element order.
bool pair_generates_cyclic(const FiniteGroup& g, Element x, Element y);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s);

ElementSet center(const FiniteGroup& g);
ElementSet centralizer(const FiniteGroup& g, Element x);
ElementSet normalizer(const FiniteGroup& g, const ElementSet& subgroup);

/// Conjugacy classes, each sorted, ordered by smallest member (identity first).
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

struct NormalSubgroupOptions {
  std::size_t max_classes = 256;
};

/// All normal subgroups, sorted by order then by membership; includes {1} and G.
/// Throws CapExceededError when the class count exceeds the cap.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, const NormalSubgroupOptions& options = {});

struct Quotient {
  FiniteGroup group;
  /// element index of G -> coset index in the quotient (identity coset is 0)
  std::vector<Element> projection;
  /// quotient index -> smallest element index of the coset
  std::vector<Element> representatives;
};

/// G/N for a normal subgroup N. Throws ValidationError when N is not normal.
Quotient quotient_group(const FiniteGroup& g, const ElementSet& normal);

/// Number of subgroups of order p: (#elements of order p) / (p - 1).
std::size_t nu_p(const FiniteGroup& g, std::size_t p);

/// Maximal cyclic subgroups, deduplicated, ordered by smallest generator index.
std::vector<ElementSet> maximal_cyclic_subgroups(const FiniteGroup& g);

enum class SmallQuotientTag { kZ2xZ2, kZ3xZ3, kS3, kOther };
std::string_view to_string(SmallQuotientTag tag);

/// Isomorphism type among Z2+Z2, Z3+Z3 and S3 by order/exponent/commutativity signature.
SmallQuotientTag identify_small_quotient(const FiniteGroup& g);

/// A Sylow p-subgroup, grown from an element of order p through normalizers.
ElementSet sylow_subgroup(const FiniteGroup& g, std::size_t p);
/// |G : N_G(P)| for a Sylow p-subgroup P.
std::size_t sylow_count(const FiniteGroup& g, std::size_t p);

/// Whether every element has order a power of p.
bool is_p_group(const FiniteGroup& g, const ElementSet& s, std::size_t p);

}  // namespace noncyc
