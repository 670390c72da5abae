#pragma once

#include <cstddef>
#include <string>

#include "smoothfano/exact_linalg.hpp"
#include "smoothfano/polytope.hpp"

namespace sfano {

/// Canonical representative of a polytope up to unimodular linear maps and
/// vertex order.
///
/// Every vertex is written in the dual basis of an ordered facet; the rows are
/// sorted lexicographically and the resulting matrix is minimized column by
/// column over all admissible (facet, ordering) pairs. Admissible facets are
/// the smallest class of a colour refinement of the vertex-facet incidence
/// graph, which is invariant under equivalence and keeps the form canonical.
struct NormalForm {
  IntMatrix canonical_matrix;  ///< n x d, rows ascending
  /// Rows as space-separated decimal integers, joined by '\n', no trailing newline.
  std::string digest;
  /// Number of partial orderings examined.
  std::size_t candidates_explored = 0;

  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.digest == b.digest; }
};

inline constexpr std::size_t kDefaultNormalFormBudget = 1'000'000;

/// Requires p to be smooth Fano (checked in full mode). Throws SizeLimit when
/// the number of live partial orderings exceeds budget.
NormalForm normal_form(const Polytope& p, std::size_t budget = kDefaultNormalFormBudget);

/// Compares (d, n, sorted eta multiset over all facets) first and the normal
/// forms only when those agree.
bool are_equivalent(const Polytope& p, const Polytope& q, std::size_t budget = kDefaultNormalFormBudget);

}  // namespace sfano
