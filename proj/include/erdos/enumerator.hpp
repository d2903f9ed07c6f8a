#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "erdos/matrix.hpp"
#include "erdos/permutation.hpp"
#include "erdos/rational.hpp"

namespace erdos {

/// Largest n accepted by canonicalisation and enumeration.
inline constexpr int kMaxCanonicalN = 6;

/// Lexicographically least row-major flattening of P A Q over all
/// permutation matrices P, Q. Two matrices are equivalent iff their canonical
/// forms are equal. Throws RangeError for n > kMaxCanonicalN.
BistochasticMatrix canonical_form(const BistochasticMatrix& a);

using SetKey = std::vector<std::uint32_t>;

/// Invariant of a permutation set containing the identity under
/// S -> {x o s o y : s in S} for permutations x, y keeping the identity in
/// the image: the least sorted rank list over all such images. Throws
/// RangeError if the identity is missing or n > kMaxCanonicalN.
SetKey set_canonical_key(std::span<const Permutation> perms);

/// One Erdos matrix up to equivalence, with the data that certifies it.
struct ErdosClass {
  BistochasticMatrix canonical;
  std::vector<Permutation> support;  // linearly independent, identity first
  RationalVector weights;            // positive, aligned with `support`
  Rational common_value;             // <Mx, x>
  Rational frob_sq;
  std::uint64_t sources = 0;         // supports in the search that produced it
};

struct EnumerationOptions {
  int n = 3;
  int max_support = 0;  // 0 means (n-1)^2 + 1
  std::optional<std::chrono::milliseconds> budget;
  int workers = 1;
  bool set_key_filter = false;  // skip solving sets equivalent to one already solved
};

struct EnumerationReport {
  int n = 0;
  int max_support = 0;
  int workers = 1;
  std::vector<ErdosClass> classes;  // sorted by canonical flattening
  std::uint64_t sets_visited = 0;
  std::uint64_t rejected_dependent = 0;
  std::uint64_t rejected_negative = 0;
  std::uint64_t rejected_maxtr = 0;
  std::uint64_t skipped_equivalent = 0;
  std::chrono::milliseconds elapsed{0};
  bool complete = false;
  /// Roots of subtrees left unexplored when the budget ran out.
  std::vector<std::vector<Permutation>> frontier;
};

/// Depth-first search over linearly independent permutation sets that
/// contain the identity, in rank order, solving each set's Gram system and
/// keeping the verified Erdos matrices up to equivalence. With
/// `complete == true` every class whose minimal independent support has at
/// most `max_support` elements is present.
///
/// Throws RangeError for n outside [2, 6], max_support outside
/// [1, (n-1)^2 + 1], or workers < 1.
EnumerationReport enumerate_erdos(const EnumerationOptions& options);

}  // namespace erdos
