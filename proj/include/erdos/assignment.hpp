#pragma once

#include <vector>

#include "erdos/matrix.hpp"
#include "erdos/permutation.hpp"
#include "erdos/rational.hpp"

namespace erdos {

enum class MaxTraceMethod {
  brute,      // all of S_n, every witness; n <= kMaxEnumerableN
  hungarian,  // Kuhn-Munkres over Q; one witness
  automatic,  // brute up to kMaxEnumerableN, hungarian beyond
};

/// maxTr(A) together with the permutations attaining it. `witnesses` is
/// complete for the brute method and holds exactly one entry otherwise.
struct MaxTraceCertificate {
  Rational value;
  std::vector<Permutation> witnesses;
  MaxTraceMethod method = MaxTraceMethod::brute;
};

/// sum_i a(i, p(i)).
Rational diagonal_sum(const RationalMatrix& a, const Permutation& p);

/// Maximum of sum_i a(i, sigma(i)) over S_n. Accepts any square matrix;
/// throws RangeError when brute force is requested beyond the cap.
MaxTraceCertificate maxtr(const RationalMatrix& a, MaxTraceMethod method = MaxTraceMethod::automatic);
inline MaxTraceCertificate maxtr(const BistochasticMatrix& a, MaxTraceMethod method = MaxTraceMethod::automatic) {
  return maxtr(a.matrix(), method);
}

/// Squared Frobenius norm.
Rational frob_sq(const BistochasticMatrix& a);

/// maxTr(A) - ||A||_F^2; nonnegative on bistochastic input.
Rational delta(const BistochasticMatrix& a, MaxTraceMethod method = MaxTraceMethod::automatic);

struct ErdosVerdict {
  bool erdos = false;
  Rational frob_sq;
  Rational delta;
  MaxTraceCertificate certificate;
};

ErdosVerdict is_erdos(const BistochasticMatrix& a, MaxTraceMethod method = MaxTraceMethod::automatic);

/// I_n / 2 + J_n / 2, the maximiser of delta on B_n.
BistochasticMatrix max_delta_matrix(int n);

}  // namespace erdos
