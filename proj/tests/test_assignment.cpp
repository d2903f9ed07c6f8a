#include <doctest.h>

#include <random>

#include "erdos/assignment.hpp"
#include "erdos/errors.hpp"
#include "erdos/sampling.hpp"
#include "helpers.hpp"

using namespace erdos;
using erdos::testing::bist;
using erdos::testing::imat;
using erdos::testing::Q;

TEST_CASE("maximal trace of small matrices") {
  const auto a = imat({{1, 5}, {4, 2}});
  const auto c = maxtr(a, MaxTraceMethod::brute);
  CHECK(c.value == Rational(9));
  REQUIRE(c.witnesses.size() == 1);
  CHECK(c.witnesses[0].one_based() == std::vector<int>{2, 1});
  // Every permutation attains J_n.
  CHECK(maxtr(BistochasticMatrix::uniform(4), MaxTraceMethod::brute).witnesses.size() == 24);
  CHECK(maxtr(BistochasticMatrix::uniform(4), MaxTraceMethod::brute).value == Rational(1));
}

TEST_CASE("hungarian agrees with brute force, including signed entries") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = Rational(BigInt(static_cast<long>(rng() % 11) - 5), BigInt(1 + static_cast<long>(rng() % 3)));
    const auto brute = maxtr(m, MaxTraceMethod::brute);
    const auto hung = maxtr(m, MaxTraceMethod::hungarian);
    CHECK(hung.value == brute.value);
    REQUIRE(hung.witnesses.size() == 1);
    CHECK(diagonal_sum(m, hung.witnesses[0]) == hung.value);
    for (const auto& w : brute.witnesses) CHECK(diagonal_sum(m, w) == brute.value);
  }
  CHECK_THROWS_AS(maxtr(RationalMatrix::identity(9), MaxTraceMethod::brute), RangeError);
  CHECK(maxtr(RationalMatrix::identity(9)).value == Rational(9));
}

TEST_CASE("known Erdos and non-Erdos matrices") {
  CHECK(is_erdos(BistochasticMatrix::identity(3)).erdos);
  CHECK(is_erdos(BistochasticMatrix::uniform(5)).erdos);
  // S and R from the n = 3 classification.
  const auto s = bist({{2, 2, 0}, {1, 1, 2}, {1, 1, 2}}, 4);
  const auto r = bist({{3, 2, 0}, {2, 1, 2}, {0, 2, 3}}, 5);
  CHECK(is_erdos(s).erdos);
  CHECK(frob_sq(s) == Q("5/4"));
  CHECK(is_erdos(r).erdos);
  CHECK(frob_sq(r) == Q("7/5"));
  const auto half = bist({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}}, 2);
  const auto mix = BistochasticMatrix::from(Q("1/2") * (half.matrix() + BistochasticMatrix::uniform(3).matrix()));
  const auto v = is_erdos(mix);
  CHECK_FALSE(v.erdos);
  CHECK(v.delta > Rational(0));
  CHECK(v.delta == v.certificate.value - v.frob_sq);
}

TEST_CASE("delta is nonnegative and bounded on random samples") {
  std::mt19937_64 rng(22);
  for (int n = 2; n <= 5; ++n) {
    const Rational cap(BigInt(n - 1), BigInt(4));
    for (int trial = 0; trial < 100; ++trial) {
      const auto d = delta(random_bistochastic(n, rng));
      CHECK(d >= Rational(0));
      CHECK(d <= cap);
    }
  }
}

TEST_CASE("max delta matrix") {
  for (int n = 1; n <= 6; ++n) {
    const auto m = max_delta_matrix(n);
    CHECK(m.matrix() == Q("1/2") * (RationalMatrix::identity(n) + BistochasticMatrix::uniform(n).matrix()));
    CHECK(delta(m) == Rational(BigInt(n - 1), BigInt(4)));
  }
}
