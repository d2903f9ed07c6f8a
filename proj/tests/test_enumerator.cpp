#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "erdos/assignment.hpp"
#include "erdos/enumerator.hpp"
#include "erdos/errors.hpp"
#include "erdos/gram.hpp"
#include "erdos/sampling.hpp"
#include "helpers.hpp"

using namespace erdos;
using namespace erdos::testing;

namespace {

// Least row-major flattening of P A Q over both permutation factors.
std::vector<Rational> brute_canonical(const RationalMatrix& a) {
  const auto n = a.rows();
  const auto all = enumerate_sn(static_cast<int>(n));
  std::vector<Rational> best;
  for (const auto& p : all)
    for (const auto& q : all) {
      std::vector<Rational> cells;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cells.push_back(a(static_cast<std::size_t>(p(i)), static_cast<std::size_t>(q(j))));
      if (best.empty() || cells < best) best = std::move(cells);
    }
  return best;
}

std::vector<std::vector<Rational>> canonical_set(const std::vector<RationalMatrix>& ms) {
  std::vector<std::vector<Rational>> out;
  for (const auto& m : ms) out.push_back(flat(canonical_form(BistochasticMatrix::from(m)).matrix()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Rational>> class_set(const EnumerationReport& r) {
  std::vector<std::vector<Rational>> out;
  for (const auto& c : r.classes) out.push_back(flat(c.canonical.matrix()));
  std::sort(out.begin(), out.end());
  return out;
}

// The six n = 3 classes written out by hand.
std::vector<RationalMatrix> n3_classes() {
  return {RationalMatrix::identity(3),
          J(3),
          imat({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}}, 2),
          imat({{2, 2, 0}, {1, 1, 2}, {1, 1, 2}}, 4),
          imat({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 2),
          imat({{3, 2, 0}, {2, 1, 2}, {0, 2, 3}}, 5)};
}

}  // namespace

TEST_CASE("canonical form matches the exhaustive minimum") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto a = random_bistochastic(n, rng, 1 + static_cast<int>(rng() % 4), 3);
    const auto c = canonical_form(a);
    CHECK(flat(c.matrix()) == brute_canonical(a.matrix()));
    // Invariance under a random row and column relabelling.
    const auto p = perm_to_matrix(random_permutation(n, rng)).matrix();
    const auto q = perm_to_matrix(random_permutation(n, rng)).matrix();
    CHECK(canonical_form(BistochasticMatrix::from(p * a.matrix() * q)).matrix() == c.matrix());
  }
  CHECK_THROWS_AS(canonical_form(BistochasticMatrix::identity(7)), RangeError);
}

TEST_CASE("set keys separate the n = 3 cases") {
  const auto key = [](std::vector<Permutation> s) { return set_canonical_key(s); };
  CHECK(key({id3(), sigma3()}) == key({id3(), gamma3()}));
  CHECK(key({id3(), sigma3()}) != key({id3(), rho3()}));
  CHECK(key({id3(), sigma3(), gamma3()}) != key({id3(), rho3(), rho3sq()}));
  CHECK(key({id3(), sigma3(), gamma3()}) == key({id3(), sigma3(), rho3sq()}));
  CHECK_THROWS_AS(key({sigma3(), gamma3()}), RangeError);
}

TEST_CASE("set keys are invariant under two-sided relabelling") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<Permutation> s{Permutation::identity(4)};
    while (s.size() < 4) s.insert(random_permutation(4, rng));
    std::vector<Permutation> set(s.begin(), s.end());
    const auto x = random_permutation(4, rng);
    const auto g = set[1 + rng() % 3];
    // x o s o g^-1 o x^-1 keeps the identity (it is the image of g).
    std::vector<Permutation> moved;
    for (const auto& p : set) moved.push_back(compose(compose(x, compose(p, g.inverse())), x.inverse()));
    CHECK(set_canonical_key(set) == set_canonical_key(moved));
  }
}

TEST_CASE("n = 2 and n = 3 catalogs") {
  EnumerationOptions opt;
  opt.n = 2;
  const auto two = enumerate_erdos(opt);
  CHECK(two.complete);
  CHECK(class_set(two) == canonical_set({RationalMatrix::identity(2), J(2)}));

  opt.n = 3;
  const auto three = enumerate_erdos(opt);
  CHECK(three.complete);
  CHECK(class_set(three) == canonical_set(n3_classes()));
  for (const auto& c : three.classes) {
    CHECK(is_erdos(c.canonical).erdos);
    CHECK(c.support.front().is_identity());
    CHECK(linear_independent(c.support));
    CHECK(c.frob_sq == c.common_value);
    for (const auto& w : c.weights) CHECK(w > Rational(0));
  }
}

TEST_CASE("worker count and the set-key filter do not change results") {
  EnumerationOptions opt;
  opt.n = 3;
  const auto base = enumerate_erdos(opt);
  opt.workers = 4;
  const auto parallel = enumerate_erdos(opt);
  REQUIRE(parallel.classes.size() == base.classes.size());
  for (std::size_t k = 0; k < base.classes.size(); ++k) {
    CHECK(parallel.classes[k].canonical.matrix() == base.classes[k].canonical.matrix());
    CHECK(parallel.classes[k].support == base.classes[k].support);
  }
  CHECK(parallel.sets_visited == base.sets_visited);
  opt.set_key_filter = true;
  const auto filtered = enumerate_erdos(opt);
  CHECK(class_set(filtered) == class_set(base));
  CHECK(filtered.skipped_equivalent > 0);
}

TEST_CASE("support cap and budget") {
  EnumerationOptions opt;
  opt.n = 3;
  opt.max_support = 2;
  const auto small = enumerate_erdos(opt);
  CHECK(small.complete);
  CHECK(class_set(small) == canonical_set({RationalMatrix::identity(3), imat({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}}, 2),
                                           imat({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 2)}));

  opt = {};
  opt.n = 5;
  opt.budget = std::chrono::milliseconds(200);
  const auto cut = enumerate_erdos(opt);
  CHECK_FALSE(cut.complete);
  CHECK_FALSE(cut.frontier.empty());
  for (const auto& c : cut.classes) CHECK(is_erdos(c.canonical).erdos);

  opt = {};
  opt.n = 7;
  CHECK_THROWS_AS(enumerate_erdos(opt), RangeError);
  opt.n = 3;
  opt.max_support = 6;
  CHECK_THROWS_AS(enumerate_erdos(opt), RangeError);
  opt.max_support = 0;
  opt.workers = 0;
  CHECK_THROWS_AS(enumerate_erdos(opt), RangeError);
}
