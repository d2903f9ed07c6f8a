#include "erdos/birkhoff.hpp"

#include <algorithm>
#include <functional>

#include "erdos/errors.hpp"

namespace erdos {

namespace {

using Support = std::vector<std::vector<char>>;

// Kuhn's augmenting-path matching restricted to rows >= first_row and
// columns not yet taken. Returns whether every such row can be matched.
bool completes(const Support& support, std::size_t first_row, const std::vector<char>& taken) {
  const std::size_t n = support.size();
  std::vector<int> match_of_col(n, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t row) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!support[row][c] || taken[c] || seen[c]) continue;
      seen[c] = 1;
      if (match_of_col[c] < 0 || augment(static_cast<std::size_t>(match_of_col[c]))) {
        match_of_col[c] = static_cast<int>(row);
        return true;
      }
    }
    return false;
  };
  for (std::size_t row = first_row; row < n; ++row) {
    seen.assign(n, 0);
    if (!augment(row)) return false;
  }
  return true;
}

RationalMatrix weighted_sum(const std::vector<Permutation>& perms, const std::vector<Rational>& weights) {
  const std::size_t n = perms.front().size();
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < perms.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) m(i, static_cast<std::size_t>(perms[k](i))) += weights[k];
  return m;
}

// Affine-dependence matrix: column k is the flattening of P_k with a trailing 1.
RationalMatrix affine_columns(const std::vector<Permutation>& perms) {
  const std::size_t n = perms.front().size();
  RationalMatrix m(n * n + 1, perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) m(i * n + static_cast<std::size_t>(perms[k](i)), k) = 1;
    m(n * n, k) = 1;
  }
  return m;
}

// Exact weights w with sum w_i P_i = target over a linearly independent
// support, via the Gram normal equations. Empty when the target is not in
// the span.
std::optional<std::vector<Rational>> weights_on(const std::vector<Permutation>& perms, const RationalMatrix& target) {
  const std::size_t m = perms.size();
  IntMatrix gram(m, m);
  std::vector<Rational> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = agreement_count(perms[i], perms[j]);
    for (std::size_t r = 0; r < target.rows(); ++r) rhs[i] += target(r, static_cast<std::size_t>(perms[i](r)));
  }
  auto w = solve(gram, rhs);
  if (weighted_sum(perms, w) != target) return std::nullopt;
  return w;
}

ConvexDecomposition from_weights(const std::vector<Permutation>& perms, const std::vector<Rational>& w) {
  ConvexDecomposition d;
  for (std::size_t k = 0; k < perms.size(); ++k)
    if (!w[k].is_zero()) d.terms.push_back({w[k], perms[k]});
  return d;
}

}  // namespace

std::vector<Permutation> ConvexDecomposition::perms() const {
  std::vector<Permutation> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.perm);
  return out;
}

std::vector<Rational> ConvexDecomposition::coefs() const {
  std::vector<Rational> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.coef);
  return out;
}

RationalMatrix ConvexDecomposition::reconstruct() const {
  if (terms.empty()) return {};
  return weighted_sum(perms(), coefs());
}

void ConvexDecomposition::validate() const {
  if (terms.empty()) throw InternalError("empty decomposition");
  Rational total;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (terms[k].coef.sign() <= 0) throw InternalError("non-positive coefficient " + terms[k].coef.str());
    if (terms[k].perm.size() != terms.front().perm.size()) throw InternalError("mixed permutation sizes");
    for (std::size_t l = 0; l < k; ++l)
      if (terms[l].perm == terms[k].perm) throw InternalError("repeated permutation " + terms[k].perm.cycle_notation());
    total += terms[k].coef;
  }
  if (total != 1) throw InternalError("coefficients sum to " + total.str());
}

std::optional<Permutation> lex_min_perfect_matching(const Support& support) {
  const std::size_t n = support.size();
  std::vector<char> taken(n, 0);
  std::vector<int> images(n, -1);
  if (!completes(support, 0, taken)) return std::nullopt;
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!support[row][c] || taken[c]) continue;
      taken[c] = 1;
      if (completes(support, row + 1, taken)) {
        images[row] = static_cast<int>(c);
        break;
      }
      taken[c] = 0;
    }
    if (images[row] < 0) throw InternalError("matching extension lost");
  }
  return Permutation::from_images(std::move(images));
}

ConvexDecomposition decompose(const BistochasticMatrix& a) {
  const std::size_t n = a.n();
  RationalMatrix residual = a.matrix();
  ConvexDecomposition d;
  while (true) {
    Support support(n, std::vector<char>(n, 0));
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (residual(i, j).sign() > 0) support[i][j] = any = 1;
    if (!any) break;
    const auto perm = lex_min_perfect_matching(support);
    if (!perm) throw InternalError("residual support has no perfect matching");
    Rational coef = residual(0, static_cast<std::size_t>((*perm)(0)));
    for (std::size_t i = 1; i < n; ++i) coef = std::min(coef, residual(i, static_cast<std::size_t>((*perm)(i))));
    for (std::size_t i = 0; i < n; ++i) residual(i, static_cast<std::size_t>((*perm)(i))) -= coef;
    d.terms.push_back({std::move(coef), *perm});
  }
  d.validate();
  return d;
}

ConvexDecomposition reduce_affine(ConvexDecomposition d) {
  d.validate();
  // Each pass zeroes at least one coefficient, so this terminates.
  while (true) {
    const auto perms = d.perms();
    const auto kernel = null_space(affine_columns(perms));
    if (kernel.empty()) break;
    const auto& beta = kernel.front();
    // beta sums to zero and is nonzero, so it has a negative entry. Step
    // along beta as far as positivity allows.
    std::optional<Rational> step;
    for (std::size_t k = 0; k < beta.size(); ++k) {
      if (beta[k].sign() >= 0) continue;
      Rational t = d.terms[k].coef / (-beta[k]);
      if (!step || t < *step) step = std::move(t);
    }
    if (!step) throw InternalError("affine dependency without a negative coefficient");
    std::vector<Rational> w = d.coefs();
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += *step * beta[k];
    d = from_weights(perms, w);
  }
  d.validate();
  return d;
}

ConvexDecomposition reduce_linear(ConvexDecomposition d) {
  const RationalMatrix target = d.reconstruct();
  d = reduce_affine(std::move(d));
  auto perms = d.perms();
  if (linear_independent(perms)) {
    const auto w = weights_on(perms, target);
    if (!w) throw InternalError("affinely reduced support does not span its own matrix");
    auto out = from_weights(perms, *w);
    out.validate();
    return out;
  }
  // Affinely but not linearly independent: drop one point at a time and
  // re-solve on the remaining independent support.
  for (std::size_t drop = 0; drop < perms.size(); ++drop) {
    std::vector<Permutation> sub;
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (k != drop) sub.push_back(perms[k]);
    if (!linear_independent(sub)) continue;
    const auto w = weights_on(sub, target);
    if (!w || std::any_of(w->begin(), w->end(), [](const Rational& q) { return q.sign() < 0; })) continue;
    auto out = from_weights(sub, *w);
    out.validate();
    return out;
  }
  throw ReductionError("no linearly independent sub-support carries nonnegative weights");
}

}  // namespace erdos
