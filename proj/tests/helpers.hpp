#pragma once

#include <string>
#include <vector>

#include "erdos/matrix.hpp"
#include "erdos/permutation.hpp"
#include "erdos/rational.hpp"

namespace erdos::testing {

inline Rational Q(const char* text) { return Rational::parse(text); }

// Rows given as rational literals, e.g. {{"1/2", "1/2"}, {"1/2", "1/2"}}.
inline RationalMatrix mat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<RationalVector> out;
  for (const auto& r : rows) {
    RationalVector row;
    for (const auto& s : r) row.push_back(Rational::parse(s));
    out.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(out);
}

inline RationalMatrix imat(const std::vector<std::vector<long>>& rows, long den = 1) {
  std::vector<RationalVector> out;
  for (const auto& r : rows) {
    RationalVector row;
    for (long v : r) row.emplace_back(BigInt(v), BigInt(den));
    out.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(out);
}

inline BistochasticMatrix bist(const std::vector<std::vector<long>>& rows, long den) {
  return BistochasticMatrix::from(imat(rows, den));
}

// 1-based cycle notation, e.g. cyc(3, {{1, 2, 3}}).
inline Permutation cyc(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  return Permutation::from_cycles(n, cycles);
}

// The n = 3 transpositions and 3-cycle used throughout the tests.
inline Permutation id3() { return Permutation::identity(3); }
inline Permutation sigma3() { return cyc(3, {{1, 2}}); }
inline Permutation gamma3() { return cyc(3, {{2, 3}}); }
inline Permutation delta3() { return cyc(3, {{1, 3}}); }
inline Permutation rho3() { return cyc(3, {{1, 2, 3}}); }
inline Permutation rho3sq() { return cyc(3, {{1, 3, 2}}); }

inline std::vector<Rational> flat(const RationalMatrix& m) {
  const auto s = m.flat();
  return {s.begin(), s.end()};
}

inline RationalMatrix J(std::size_t n) { return BistochasticMatrix::uniform(n).matrix(); }

}  // namespace erdos::testing
