#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "noncyc/finite_group.hpp"
#include "noncyc/group_spec.hpp"

namespace noncyc {

struct BuildOptions {
  /// Hard limit on the order of any group built; matches S7.
  std::size_t element_cap = 5040;
  /// Run the O(n^3) associativity check on internally built tables too.
  bool paranoid = false;
};

/// Realizes a catalog recipe as a validated Cayley table.
///
/// Permutation and matrix variants (Symmetric, Alternating, SL2, PSL2,
/// FromPermGenerators) are enumerated by breadth-first closure of their
/// generators and then converted to a table. PSL2(q) is the permutation
/// group induced by SL2(q) on the q+1 points of the projective line.
FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& options = {});

/// Cayley-table document: {"order": n, "names": [...], "table": [[...], ...]}.
/// Always fully validated, including associativity.
FiniteGroup load_cayley_file(const std::string& path, const BuildOptions& options = {});
FiniteGroup parse_cayley_document(const std::string& text, const BuildOptions& options = {});
std::string cayley_document(const FiniteGroup& g);
void write_cayley_file(const FiniteGroup& g, const std::string& path);

/// Permutation generator document: {"degree": d, "generators": [[images...], ...]}, 0-based.
FiniteGroup load_perm_generators(const std::string& path, const BuildOptions& options = {});
FiniteGroup parse_perm_document(const std::string& text, const BuildOptions& options = {});

/// Closes a set of permutations (0-based image arrays of equal degree) into a group.
FiniteGroup group_from_permutations(const std::vector<std::vector<std::size_t>>& generators,
                                    const BuildOptions& options = {});

}  // namespace noncyc
