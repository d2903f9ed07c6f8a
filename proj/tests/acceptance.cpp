// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "erdos/assignment.hpp"
#include "erdos/birkhoff.hpp"
#include "erdos/enumerator.hpp"
#include "erdos/gram.hpp"
#include "erdos/sampling.hpp"
#include "erdos/surd.hpp"
#include "helpers.hpp"

using namespace erdos;
using namespace erdos::testing;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits, in seconds.
constexpr double kLimitN2 = 1.0;
constexpr double kLimitN3 = 10.0;
constexpr double kLimitN4 = 1800.0;
constexpr double kLimitDelta = 60.0;
constexpr double kLimitHungarian = 120.0;

constexpr int kN4Workers = 8;
constexpr int kDeltaSamples = 1000;
constexpr int kHungarianSamples = 500;
constexpr int kDecompositionSamples = 200;
constexpr int kAlphaCount = 50;
constexpr std::uint64_t kSeed = 20240601;

// Every comparison below is exact; no floating-point tolerance is used.

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<Rational> canon_flat(const RationalMatrix& m) { return flat(canonical_form(BistochasticMatrix::from(m)).matrix()); }

bool has_class(const EnumerationReport& r, const RationalMatrix& m) {
  const auto key = canon_flat(m);
  for (const auto& c : r.classes)
    if (flat(c.canonical.matrix()) == key) return true;
  return false;
}

bool same_classes(const EnumerationReport& r, const std::vector<RationalMatrix>& expected) {
  if (r.classes.size() != expected.size()) return false;
  for (const auto& m : expected)
    if (!has_class(r, m)) return false;
  return true;
}

EnumerationReport run(int n, int workers) {
  EnumerationOptions opt;
  opt.n = n;
  opt.workers = workers;
  return enumerate_erdos(opt);
}

std::vector<RationalMatrix> n3_classes() {
  return {RationalMatrix::identity(3),
          J(3),
          imat({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}}, 2),
          imat({{2, 2, 0}, {1, 1, 2}, {1, 1, 2}}, 4),
          imat({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 2),
          imat({{3, 2, 0}, {2, 1, 2}, {0, 2, 3}}, 5)};
}

std::vector<std::vector<long>> gram_rows(const GramSystem& g) {
  std::vector<std::vector<long>> out(g.m(), std::vector<long>(g.m()));
  for (std::size_t i = 0; i < g.m(); ++i)
    for (std::size_t j = 0; j < g.m(); ++j) out[i][j] = g.gram(i, j);
  return out;
}

RationalVector frac(std::vector<long> nums, long den) {
  RationalVector out;
  for (long v : nums) out.emplace_back(BigInt(v), BigInt(den));
  return out;
}

Outcome c1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = run(2, 1);
  const double s = seconds_since(t0);
  o.require(r.complete, "incomplete");
  o.require(same_classes(r, {RationalMatrix::identity(2), J(2)}), "class set differs from {I2, J2}");
  o.require(s < kLimitN2, "too slow");
  o.detail << (o.pass ? "" : " ") << r.classes.size() << " classes in " << s << " s";
  return o;
}

Outcome c2() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = run(3, 1);
  const double s = seconds_since(t0);
  o.require(r.complete, "incomplete");
  o.require(same_classes(r, n3_classes()), "class set differs from {I3, J3, I+J2, S, T, R}");
  o.require(s < kLimitN3, "too slow");
  o.detail << (o.pass ? "" : " ") << r.classes.size() << " classes in " << s << " s, single thread";
  return o;
}

Outcome c3() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = run(4, kN4Workers);
  const double s = seconds_since(t0);
  o.require(r.complete, "incomplete");
  o.require(s < kLimitN4, "too slow");
  o.require(has_class(r, RationalMatrix::identity(4)), "I4 missing");
  o.require(has_class(r, J(4)), "J4 missing");
  o.require(has_class(r, imat({{3, 3, 0, 0}, {1, 1, 2, 2}, {1, 1, 2, 2}, {1, 1, 2, 2}}, 6)), "non-symmetric example missing");
  for (const auto& h : half_identity_family(4)) o.require(has_class(r, h.matrix()), "half-identity class missing");
  bool all_erdos = true;
  for (const auto& c : r.classes) all_erdos = all_erdos && is_erdos(c.canonical).erdos;
  o.require(all_erdos, "a class fails re-verification");
  const auto bound = count_bound(4).equivalence;
  o.require(r.classes.size() >= 5 && BigInt(static_cast<unsigned long>(r.classes.size())) <= bound, "count out of range");
  o.detail << (o.pass ? "" : " ") << r.classes.size() << " classes (reported, range [5, " << bound.get_str() << "]), "
           << r.sets_visited << " sets, " << s << " s on " << kN4Workers << " workers";
  return o;
}

Outcome c4() {
  Outcome o;
  const auto g = build_gram({Permutation::identity(4), cyc(4, {{1, 2}}), cyc(4, {{2, 3}}), cyc(4, {{3, 4}})});
  o.require(gram_rows(g) == std::vector<std::vector<long>>{{4, 2, 2, 2}, {2, 4, 1, 0}, {2, 1, 4, 1}, {2, 0, 1, 4}}, "M differs");
  const auto inv = inverse(g.gram.to_rational());
  o.require(inv == imat({{14, -6, -4, -6}, {-6, 9, 0, 3}, {-4, 0, 8, 0}, {-6, 3, 0, 9}}, 24), "inverse differs");
  const auto y = inv * RationalVector(4, Rational(1));
  o.require(y[0] == Q("-1/12"), "first entry of M^-1 1 is " + y[0].str());
  o.detail << (o.pass ? "" : " ") << "(M^-1 1)_1 = " << y[0];
  return o;
}

Outcome c5() {
  Outcome o;
  const auto I = id3(), s = sigma3(), g = gamma3(), d = delta3(), r = rho3(), r2 = rho3sq();
  struct Case {
    const char* name;
    std::vector<Permutation> perms;
    std::vector<std::vector<long>> gram;
    RationalVector x;
  };
  const std::vector<Case> cases{
      {"{I,s,g}", {I, s, g}, {{3, 1, 1}, {1, 3, 0}, {1, 0, 3}}, frac({1, 2, 2}, 5)},
      {"{I,r,r^2}", {I, r, r2}, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}, frac({1, 1, 1}, 3)},
      {"{I,s,g,r}", {I, s, g, r}, {{3, 1, 1, 0}, {1, 3, 0, 1}, {1, 0, 3, 1}, {0, 1, 1, 3}}, frac({1, 1, 1, 1}, 4)},
      {"{I,s,g,d}", {I, s, g, d}, {{3, 1, 1, 1}, {1, 3, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}}, frac({0, 1, 1, 1}, 3)},
      {"{I,r,s,g,d}",
       {I, r, s, g, d},
       {{3, 0, 1, 1, 1}, {0, 3, 1, 1, 1}, {1, 1, 3, 0, 0}, {1, 1, 0, 3, 0}, {1, 1, 0, 0, 3}},
       frac({0, 0, 1, 1, 1}, 3)},
  };
  for (const auto& c : cases) {
    const auto sys = build_gram(c.perms);
    o.require(gram_rows(sys) == c.gram, std::string(c.name) + " M differs");
    const auto out = pipeline(sys);
    o.require(out.accepted(), std::string(c.name) + " rejected");
    o.require(out.solution && out.solution->x == c.x, std::string(c.name) + " x differs");
  }
  // The last case again through its positive sub-support, padded with zeros.
  const auto sub = solve_candidate(build_gram({s, g, d}));
  RationalVector padded{Rational(0), Rational(0)};
  padded.insert(padded.end(), sub.x.begin(), sub.x.end());
  o.require(padded == cases.back().x, "sub-support extension differs");
  o.detail << (o.pass ? "" : " ") << cases.size() << " replays";
  return o;
}

Outcome c6() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = 2; n <= 6; ++n)
    o.require(delta(max_delta_matrix(n)) == Rational(BigInt(n - 1), BigInt(4)), "maximiser wrong at n=" + std::to_string(n));
  std::mt19937_64 rng(kSeed);
  for (int n = 3; n <= 5; ++n) {
    const Rational cap(BigInt(n - 1), BigInt(4));
    int bad = 0;
    for (int k = 0; k < kDeltaSamples; ++k) {
      const auto d = delta(random_bistochastic(n, rng));
      if (d < Rational(0) || d > cap) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " samples out of range at n=" + std::to_string(n));
  }
  const double s = seconds_since(t0);
  o.require(s < kLimitDelta, "too slow");
  o.detail << (o.pass ? "" : " ") << 3 * kDeltaSamples << " samples in " << s << " s";
  return o;
}

Outcome c7() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kSeed + 1);
  for (int n = 3; n <= 6; ++n) {
    int bad = 0;
    for (int k = 0; k < kHungarianSamples; ++k) {
      const auto a = random_bistochastic(n, rng);
      const auto h = maxtr(a, MaxTraceMethod::hungarian);
      if (h.value != maxtr(a, MaxTraceMethod::brute).value || diagonal_sum(a.matrix(), h.witnesses.at(0)) != h.value) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " mismatches at n=" + std::to_string(n));
  }
  const double s = seconds_since(t0);
  o.require(s < kLimitHungarian, "too slow");
  o.detail << (o.pass ? "" : " ") << 4 * kHungarianSamples << " matrices in " << s << " s";
  return o;
}

Outcome c8() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 2);
  for (int n = 3; n <= 5; ++n) {
    const auto cap = static_cast<std::size_t>((n - 1) * (n - 1) + 1);
    int bad = 0;
    for (int k = 0; k < kDecompositionSamples; ++k) {
      const auto a = random_bistochastic(n, rng);
      const auto d = decompose(a);
      const auto r = reduce_affine(d);
      const auto perms = r.perms();
      if (d.reconstruct() != a.matrix() || r.reconstruct() != a.matrix() || !affine_independent(perms) || r.size() > cap) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " bad round trips at n=" + std::to_string(n));
  }
  for (const auto& m : n3_classes()) {
    const auto a = BistochasticMatrix::from(m);
    const auto r = reduce_linear(decompose(a));
    const auto perms = r.perms();
    const auto out = pipeline(perms);
    o.require(linear_independent(perms) && out.accepted() && out.matrix->matrix() == m, "n=3 class not re-derived");
  }
  o.detail << (o.pass ? "" : " ") << 3 * kDecompositionSamples << " round trips, 6 class re-derivations";
  return o;
}

Outcome c9() {
  Outcome o;
  const std::vector<std::size_t> expected{1, 2, 3, 5, 7, 11};
  for (int n = 2; n <= 6; ++n) {
    const auto fam = half_identity_family(n);
    const auto reps = conjugacy_class_reps(n);
    o.require(fam.size() == expected[n - 1], "wrong count at n=" + std::to_string(n));
    for (std::size_t k = 0; k < fam.size(); ++k) {
      const auto v = is_erdos(fam[k]);
      o.require(v.erdos && v.frob_sq == Rational(BigInt(n + reps[k].fixed_points()), BigInt(2)),
                "member " + reps[k].cycle_notation() + " at n=" + std::to_string(n));
    }
  }
  o.detail << (o.pass ? "" : " ") << "counts 2, 3, 5, 7, 11 for n = 2..6";
  return o;
}

Outcome c10() {
  Outcome o;
  // alpha = k / 196, k = 0..49, so the grid spans [0, 1/4] inclusive.
  std::size_t checked = 0;
  for (int k = 0; k < kAlphaCount; ++k) {
    const Rational alpha(BigInt(k), BigInt(4 * (kAlphaCount - 1)));
    for (const auto& p : omega2(alpha)) {
      ++checked;
      o.require(delta2_of_p(p) == Surd(alpha), "alpha " + alpha.str() + " p " + p.str());
    }
  }
  const auto zero = omega2(Rational(0));
  o.require(zero == std::vector<Surd>{Surd(Rational(0)), Surd(Q("1/2")), Surd(Rational(1))}, "omega2(0) differs");
  o.detail << (o.pass ? "" : " ") << checked << " solutions checked";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"n=2 catalog", c1},
      {"n=3 catalog", c2},
      {"n=4 enumeration", c3},
      {"S_4 Gram example", c4},
      {"n=3 replays", c5},
      {"discrepancy range", c6},
      {"Hungarian vs brute force", c7},
      {"decomposition round trips", c8},
      {"half-identity family", c9},
      {"omega2 inversion", c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
