#include "erdos/assignment.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "erdos/errors.hpp"

namespace erdos {

namespace {

void require_square(const RationalMatrix& a) {
  if (!a.square() || a.rows() == 0) throw DimensionError("maximal trace needs a non-empty square matrix");
}

MaxTraceCertificate brute_maxtr(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n > static_cast<std::size_t>(kMaxEnumerableN)) {
    throw RangeError("brute-force maximal trace is capped at n = " + std::to_string(kMaxEnumerableN));
  }
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  MaxTraceCertificate cert;
  cert.method = MaxTraceMethod::brute;
  bool first = true;
  Rational sum;
  do {
    sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += a(i, static_cast<std::size_t>(images[i]));
    if (first || sum > cert.value) {
      cert.value = sum;
      cert.witnesses.clear();
      first = false;
    }
    if (sum == cert.value) cert.witnesses.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return cert;
}

// Kuhn-Munkres with potentials (1-based arrays, column 0 is a sentinel),
// minimising the cost -a. All quantities stay in Q.
MaxTraceCertificate hungarian_maxtr(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> u(n + 1), v(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::optional<Rational> best;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = -a(i0 - 1, j - 1) - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = std::move(cur);
          way[j] = j0;
        }
        if (!best || *minv[j] < *best) {
          best = minv[j];
          j1 = j;
        }
      }
      if (!best) throw InternalError("Hungarian step found no free column");
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *best;
          v[j] -= *best;
        } else if (minv[j]) {
          *minv[j] -= *best;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> images(n);
  for (std::size_t j = 1; j <= n; ++j) images[p[j] - 1] = static_cast<int>(j - 1);
  MaxTraceCertificate cert;
  cert.method = MaxTraceMethod::hungarian;
  cert.witnesses.push_back(Permutation::from_images(std::move(images)));
  cert.value = diagonal_sum(a, cert.witnesses.front());
  return cert;
}

}  // namespace

Rational diagonal_sum(const RationalMatrix& a, const Permutation& p) {
  if (!a.square() || a.rows() != p.size()) throw DimensionError("permutation size does not match matrix");
  Rational s;
  for (std::size_t i = 0; i < p.size(); ++i) s += a(i, static_cast<std::size_t>(p(i)));
  return s;
}

MaxTraceCertificate maxtr(const RationalMatrix& a, MaxTraceMethod method) {
  require_square(a);
  switch (method) {
    case MaxTraceMethod::brute:
      return brute_maxtr(a);
    case MaxTraceMethod::hungarian:
      return hungarian_maxtr(a);
    case MaxTraceMethod::automatic:
      break;
  }
  return a.rows() <= static_cast<std::size_t>(kMaxEnumerableN) ? brute_maxtr(a) : hungarian_maxtr(a);
}

Rational frob_sq(const BistochasticMatrix& a) { return frobenius_inner(a.matrix(), a.matrix()); }

Rational delta(const BistochasticMatrix& a, MaxTraceMethod method) { return maxtr(a, method).value - frob_sq(a); }

ErdosVerdict is_erdos(const BistochasticMatrix& a, MaxTraceMethod method) {
  ErdosVerdict verdict;
  verdict.certificate = maxtr(a, method);
  verdict.frob_sq = frob_sq(a);
  verdict.delta = verdict.certificate.value - verdict.frob_sq;
  verdict.erdos = verdict.delta.is_zero();
  return verdict;
}

BistochasticMatrix max_delta_matrix(int n) {
  if (n < 1) throw RangeError("max_delta_matrix requires n >= 1");
  const auto size = static_cast<std::size_t>(n);
  const Rational off(BigInt(1), BigInt(2 * n));
  RationalMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = i == j ? Rational(BigInt(1), BigInt(2)) + off : off;
  return BistochasticMatrix::from(std::move(m));
}

}  // namespace erdos
