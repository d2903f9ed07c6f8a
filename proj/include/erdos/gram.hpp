#pragma once

#include <optional>
#include <string>
#include <vector>

#include "erdos/assignment.hpp"
#include "erdos/matrix.hpp"
#include "erdos/permutation.hpp"
#include "erdos/rational.hpp"

namespace erdos {

enum class Independence { linear, affine_only, dependent };

std::string to_string(Independence independence);

/// A set of distinct permutations of [n] with Gram matrix
/// gram(i, j) = <P_i, P_j>_F = agreement_count(perms[i], perms[j]).
struct GramSystem {
  std::vector<Permutation> perms;
  IntMatrix gram;
  Independence independence = Independence::dependent;

  std::size_t n() const { return perms.empty() ? 0 : perms.front().size(); }
  std::size_t m() const { return perms.size(); }
};

/// Weights x with M x = <M x, x> 1 and sum x = 1.
struct CandidateSolution {
  RationalVector x;
  Rational common_value;
  bool nonneg = false;
};

/// Throws RangeError on an empty or repeated set, DimensionError on mixed n.
GramSystem build_gram(std::vector<Permutation> perms);

/// x = M^{-1} 1 / <1, M^{-1} 1>. Requires a linearly independent set
/// (DependentSetError otherwise). Cross-checks every coordinate of M x
/// against <M x, x> and throws InternalError on mismatch.
CandidateSolution solve_candidate(const GramSystem& g);

/// sum x_i P_i. Throws RangeError if some x_i is negative.
BistochasticMatrix assemble(const GramSystem& g, const CandidateSolution& x);

enum class Rejection { dependent, negative_weight, maxtr_exceeded };

std::string to_string(Rejection reason);

struct PipelineOutcome {
  std::optional<BistochasticMatrix> matrix;  // set iff accepted
  std::optional<Rejection> rejection;        // set iff rejected
  std::optional<CandidateSolution> solution;
  std::optional<ErdosVerdict> verdict;

  bool accepted() const { return matrix.has_value(); }
};

/// Solve, check the sign of the weights, assemble and verify the maximal
/// trace over all of S_n. Dependent sets and negative weights are ordinary
/// rejections, not errors.
PipelineOutcome pipeline(const GramSystem& g);
PipelineOutcome pipeline(std::vector<Permutation> perms);

/// One matrix (I_n + P) / 2 per conjugacy class representative P, each
/// checked to be Erdos with ||A||_F^2 = (n + fixed_points(P)) / 2.
std::vector<BistochasticMatrix> half_identity_family(int n);

struct CountBound {
  BigInt total;        // sum_{j=1}^{(n-1)^2+1} C(n!, j)
  BigInt equivalence;  // sum_{j=0}^{(n-1)^2} C(n!-1, j)
};

/// Requires 2 <= n <= 20.
CountBound count_bound(int n);

}  // namespace erdos
