#include "erdos/gram.hpp"

#include <algorithm>

#include "erdos/errors.hpp"

namespace erdos {

std::string to_string(Independence independence) {
  switch (independence) {
    case Independence::linear:
      return "linear";
    case Independence::affine_only:
      return "affine_only";
    case Independence::dependent:
      return "dependent";
  }
  return "unknown";
}

std::string to_string(Rejection reason) {
  switch (reason) {
    case Rejection::dependent:
      return "dependent";
    case Rejection::negative_weight:
      return "negative_weight";
    case Rejection::maxtr_exceeded:
      return "maxtr_exceeded";
  }
  return "unknown";
}

GramSystem build_gram(std::vector<Permutation> perms) {
  if (perms.empty()) throw RangeError("build_gram needs at least one permutation");
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (perms[i].size() != perms.front().size()) throw DimensionError("permutations of mixed sizes");
    for (std::size_t j = 0; j < i; ++j)
      if (perms[i] == perms[j]) throw RangeError("repeated permutation " + perms[i].cycle_notation());
  }
  GramSystem g;
  const std::size_t m = perms.size();
  g.gram = IntMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g.gram(i, j) = agreement_count(perms[i], perms[j]);
  if (linear_independent(perms)) {
    g.independence = Independence::linear;
  } else if (affine_independent(perms)) {
    g.independence = Independence::affine_only;
  } else {
    g.independence = Independence::dependent;
  }
  g.perms = std::move(perms);
  return g;
}

CandidateSolution solve_candidate(const GramSystem& g) {
  if (g.independence != Independence::linear) {
    throw DependentSetError("Gram system is " + to_string(g.independence) + ", a linearly independent set is required");
  }
  const std::size_t m = g.m();
  const RationalVector ones(m, Rational(1));
  RationalVector y = solve(g.gram, ones);
  Rational total;
  for (const auto& v : y) total += v;
  // total = <M y, y> > 0 for positive definite M.
  if (total.sign() <= 0) throw InternalError("1' M^{-1} 1 is not positive: " + total.str());

  CandidateSolution sol;
  sol.x.reserve(m);
  for (auto& v : y) sol.x.push_back(v / total);

  const RationalMatrix gram = g.gram.to_rational();
  const RationalVector mx = gram * sol.x;
  Rational common;
  Rational sum_x;
  for (std::size_t i = 0; i < m; ++i) {
    common += mx[i] * sol.x[i];
    sum_x += sol.x[i];
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (mx[i] != common) throw InternalError("(M x)_" + std::to_string(i + 1) + " = " + mx[i].str() + " differs from <Mx,x> = " + common.str());
  }
  if (sum_x != 1) throw InternalError("candidate weights sum to " + sum_x.str());
  sol.common_value = std::move(common);
  sol.nonneg = std::none_of(sol.x.begin(), sol.x.end(), [](const Rational& q) { return q.sign() < 0; });
  return sol;
}

BistochasticMatrix assemble(const GramSystem& g, const CandidateSolution& x) {
  if (x.x.size() != g.m()) throw DimensionError("weight vector length does not match the permutation set");
  const std::size_t n = g.n();
  RationalMatrix a(n, n);
  for (std::size_t k = 0; k < g.m(); ++k) {
    if (x.x[k].sign() < 0) throw RangeError("weight " + std::to_string(k + 1) + " is negative: " + x.x[k].str());
    if (x.x[k].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) a(i, static_cast<std::size_t>(g.perms[k](i))) += x.x[k];
  }
  return BistochasticMatrix::from(std::move(a));
}

PipelineOutcome pipeline(const GramSystem& g) {
  PipelineOutcome out;
  if (g.independence != Independence::linear) {
    out.rejection = Rejection::dependent;
    return out;
  }
  out.solution = solve_candidate(g);
  if (!out.solution->nonneg) {
    out.rejection = Rejection::negative_weight;
    return out;
  }
  BistochasticMatrix a = assemble(g, *out.solution);
  out.verdict = is_erdos(a);
  // The weights make <A, P_i> equal for the chosen P_i only; a permutation
  // outside the set can still beat them.
  if (!out.verdict->erdos) {
    out.rejection = Rejection::maxtr_exceeded;
    return out;
  }
  if (out.verdict->frob_sq != out.solution->common_value) {
    throw InternalError("||A||_F^2 = " + out.verdict->frob_sq.str() + " but <Mx,x> = " + out.solution->common_value.str());
  }
  out.matrix = std::move(a);
  return out;
}

PipelineOutcome pipeline(std::vector<Permutation> perms) { return pipeline(build_gram(std::move(perms))); }

std::vector<BistochasticMatrix> half_identity_family(int n) {
  if (n < 1) throw RangeError("half_identity_family requires n >= 1");
  const auto size = static_cast<std::size_t>(n);
  const Rational half(BigInt(1), BigInt(2));
  std::vector<BistochasticMatrix> family;
  for (const auto& p : conjugacy_class_reps(n)) {
    RationalMatrix a(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      a(i, i) += half;
      a(i, static_cast<std::size_t>(p(i))) += half;
    }
    auto m = BistochasticMatrix::from(std::move(a));
    const auto verdict = is_erdos(m);
    const Rational expected = Rational(BigInt(n + p.fixed_points()), BigInt(2));
    if (!verdict.erdos || verdict.frob_sq != expected) {
      throw InternalError("(I + " + p.cycle_notation() + ")/2 failed the Erdos check");
    }
    family.push_back(std::move(m));
  }
  return family;
}

CountBound count_bound(int n) {
  if (n < 2 || n > 20) throw RangeError("count_bound requires 2 <= n <= 20");
  const BigInt group_order(std::to_string(factorial(n)));
  const unsigned long top = static_cast<unsigned long>((n - 1) * (n - 1));
  CountBound b;
  b.total = 0;
  b.equivalence = 0;
  BigInt c;
  for (unsigned long j = 1; j <= top + 1; ++j) {
    mpz_bin_ui(c.get_mpz_t(), group_order.get_mpz_t(), j);
    b.total += c;
  }
  const BigInt reduced = group_order - 1;
  for (unsigned long j = 0; j <= top; ++j) {
    mpz_bin_ui(c.get_mpz_t(), reduced.get_mpz_t(), j);
    b.equivalence += c;
  }
  return b;
}

}  // namespace erdos
