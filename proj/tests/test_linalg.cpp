#include <doctest.h>

#include <random>

#include "erdos/errors.hpp"
#include "erdos/matrix.hpp"
#include "erdos/sampling.hpp"
#include "helpers.hpp"

using namespace erdos;
using erdos::testing::imat;
using erdos::testing::mat;

namespace {

// Leibniz expansion over S_n, used as an oracle for small sizes.
Rational leibniz_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  Rational total(0);
  for (const auto& p : enumerate_sn(static_cast<int>(n))) {
    Rational term(cycle_type(p).parts.size() % 2 == n % 2 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, static_cast<std::size_t>(p(i)));
    total += term;
  }
  return total;
}

// Rank as the largest k with a nonzero k x k minor.
std::size_t minor_rank(const RationalMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t best = 0;
  for (unsigned rm = 1; rm < (1u << r); ++rm) {
    for (unsigned cm = 1; cm < (1u << c); ++cm) {
      const auto k = static_cast<std::size_t>(__builtin_popcount(rm));
      if (k != static_cast<std::size_t>(__builtin_popcount(cm)) || k <= best) continue;
      RationalMatrix sub(k, k);
      std::size_t si = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rm >> i & 1)) continue;
        std::size_t sj = 0;
        for (std::size_t j = 0; j < c; ++j)
          if (cm >> j & 1) sub(si, sj++) = m(i, j);
        ++si;
      }
      if (!leibniz_det(sub).is_zero()) best = k;
    }
  }
  return best;
}

RationalMatrix random_small(std::size_t r, std::size_t c, std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<long> num(-spread, spread), den(1, 4);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(BigInt(num(rng)), BigInt(den(rng)));
  return m;
}

}  // namespace

TEST_CASE("determinant and rank match minor expansions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    // Small spread makes singular matrices common.
    const auto m = random_small(r, c, rng, trial % 2 ? 1 : 3);
    CHECK(rank(m) == minor_rank(m));
    if (r == c) CHECK(determinant(m) == leibniz_det(m));
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto m = random_small(n, n, rng, 5);
    RationalVector b(n);
    for (auto& v : b) v = Rational(static_cast<long>(rng() % 7) - 3);
    if (determinant(m).is_zero()) {
      CHECK_THROWS_AS(inverse(m), SingularMatrixError);
      CHECK_THROWS_AS(solve(m, b), SingularMatrixError);
      continue;
    }
    CHECK(m * solve(m, b) == b);
    CHECK(m * inverse(m) == RationalMatrix::identity(n));
  }
  CHECK_THROWS_AS(solve(RationalMatrix(2, 3), RationalVector(2)), DimensionError);
}

TEST_CASE("integer solve agrees with the rational one") {
  const auto m = IntMatrix::from_rows({{4, 2, 2, 2}, {2, 4, 1, 0}, {2, 1, 4, 1}, {2, 0, 1, 4}});
  const RationalVector ones(4, Rational(1));
  CHECK(solve(m, ones) == solve(m.to_rational(), ones));
}

TEST_CASE("null space") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const auto m = random_small(r, c, rng, 1);
    const auto basis = null_space(m);
    CHECK(basis.size() == c - rank(m));
    for (const auto& v : basis) CHECK(m * v == RationalVector(r, Rational(0)));
    if (!basis.empty()) {
      RationalMatrix b(basis.size(), c);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < c; ++j) b(i, j) = basis[i][j];
      CHECK(rank(b) == basis.size());
    }
  }
}

TEST_CASE("leading principal minors") {
  const auto m = imat({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
  CHECK(leading_principal_minors(m) == std::vector<Rational>{2, 3, 4});
}

TEST_CASE("bistochastic validation names the failing line") {
  CHECK_NOTHROW(BistochasticMatrix::from(mat({{"1/2", "1/2"}, {"1/2", "1/2"}})));
  try {
    BistochasticMatrix::from(mat({{"1/2", "1/2", "0"}, {"1/2", "1/2", "0"}, {"0", "1/10", "4/5"}}));
    FAIL("expected NotBistochasticError");
  } catch (const NotBistochasticError& e) {
    CHECK(e.kind() == NotBistochasticError::Kind::row);
    CHECK(e.index() == 2);
    CHECK(std::string(e.what()).find("9/10") != std::string::npos);
  }
  CHECK_THROWS_AS(BistochasticMatrix::from(mat({{"3/2", "-1/2"}, {"-1/2", "3/2"}})), NotBistochasticError);
  CHECK_THROWS_AS(BistochasticMatrix::from(mat({{"1", "0"}, {"1", "0"}})), NotBistochasticError);
  CHECK_THROWS_AS(BistochasticMatrix::from(RationalMatrix(2, 3)), NotBistochasticError);
}

TEST_CASE("independence of permutation matrices") {
  const auto s3 = enumerate_sn(3);
  CHECK(linear_independent(std::span(s3).first(5)));
  CHECK_FALSE(linear_independent(s3));
  // For n = 4 the span of all 24 permutation matrices has dimension 10.
  const auto s4 = enumerate_sn(4);
  std::vector<Permutation> basis;
  for (const auto& p : s4) {
    basis.push_back(p);
    if (!linear_independent(basis)) basis.pop_back();
  }
  CHECK(basis.size() == 10);
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Permutation> set;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 8); ++k) set.push_back(random_permutation(4, rng));
    CHECK(affine_independent(set) == linear_independent(set));
  }
}

TEST_CASE("incremental basis matches batch rank") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    IncrementalBasis basis(16);
    std::vector<Permutation> kept;
    for (int k = 0; k < 12; ++k) {
      const auto p = random_permutation(4, rng);
      kept.push_back(p);
      const bool independent = linear_independent(kept);
      CHECK(basis.push_if_independent(perm_indicator(p)) == independent);
      if (!independent) kept.pop_back();
    }
    while (!kept.empty()) {
      basis.pop();
      kept.pop_back();
      if (!kept.empty()) {
        const auto p = random_permutation(4, rng);
        kept.push_back(p);
        const bool independent = linear_independent(kept);
        CHECK(basis.push_if_independent(perm_indicator(p)) == independent);
        kept.pop_back();
        if (independent) basis.pop();
      }
    }
  }
}

TEST_CASE("matrix text format") {
  const auto m = parse_matrix("# comment\n1/2 1/2\n\n  1/2   1/2  \n");
  CHECK(m == mat({{"1/2", "1/2"}, {"1/2", "1/2"}}));
  CHECK(parse_matrix(format_matrix(m)) == m);
  try {
    parse_matrix("1 0\n0 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.token() == "x");
  }
  CHECK_THROWS_AS(parse_matrix("1 0\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("# nothing\n"), ParseError);
}
