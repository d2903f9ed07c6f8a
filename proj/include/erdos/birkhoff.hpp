#pragma once

#include <optional>
#include <vector>

#include "erdos/matrix.hpp"
#include "erdos/permutation.hpp"
#include "erdos/rational.hpp"

namespace erdos {

struct DecompositionTerm {
  Rational coef;
  Permutation perm;
  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// A = sum coef_i * P_{perm_i} with positive coefficients summing to one and
/// pairwise distinct permutations.
struct ConvexDecomposition {
  std::vector<DecompositionTerm> terms;

  std::size_t size() const noexcept { return terms.size(); }
  std::vector<Permutation> perms() const;
  std::vector<Rational> coefs() const;
  /// sum coef_i * P_i as a plain matrix (no bistochastic re-validation).
  RationalMatrix reconstruct() const;
  /// Throws InternalError if any invariant is violated.
  void validate() const;

  friend bool operator==(const ConvexDecomposition&, const ConvexDecomposition&) = default;
};

/// Lexicographically smallest permutation p with support[i][p(i)] set for
/// every row, if one exists. Rows are filled greedily, each choice checked for
/// extendability by augmenting-path matching.
std::optional<Permutation> lex_min_perfect_matching(const std::vector<std::vector<char>>& support);

/// Greedy Birkhoff-von Neumann decomposition: repeatedly peel off the
/// lexicographically smallest permutation inside the positive support,
/// weighted by its smallest entry.
ConvexDecomposition decompose(const BistochasticMatrix& a);

/// Shrinks the support along affine dependencies until it is affinely
/// independent. The represented matrix is unchanged.
ConvexDecomposition reduce_affine(ConvexDecomposition d);

/// Returns a representation over a linearly independent support, with the
/// weights re-derived by an exact solve on that support. Throws
/// ReductionError if no such support carries nonnegative weights.
ConvexDecomposition reduce_linear(ConvexDecomposition d);

}  // namespace erdos
