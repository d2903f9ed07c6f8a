#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace erdos {

/// Largest n for which the full symmetric group is ever materialised.
inline constexpr int kMaxEnumerableN = 8;

/// Element of S_n in one-line notation. Images are 0-based internally; the
/// display helpers (cycle notation, JSON image lists) are 1-based.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  /// Throws RangeError unless `images` is a bijection of {0, ..., n-1}.
  static Permutation from_images(std::vector<int> images);
  static Permutation from_one_based(const std::vector<int>& images);
  /// Builds a permutation of [n] from 1-based cycles such as {{1,2,3}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

  std::size_t size() const noexcept { return images_.size(); }
  int operator()(std::size_t i) const noexcept { return images_[i]; }
  std::span<const int> images() const noexcept { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  int fixed_points() const noexcept;
  bool is_identity() const noexcept { return fixed_points() == static_cast<int>(size()); }

  /// Disjoint cycle notation, e.g. "(12)(34)"; "()" for the identity.
  /// Points are separated by commas once n exceeds 9.
  std::string cycle_notation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// (a o b)(i) = a(b(i)). Throws DimensionError on size mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// Number of points where a and b agree; equals the Frobenius inner product
/// of their permutation matrices.
int agreement_count(const Permutation& a, const Permutation& b);

/// Cycle lengths sorted non-increasing.
struct CycleType {
  std::vector<int> parts;
  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

/// One representative per cycle type, in ascending lexicographic order of
/// the (non-increasing) part lists, so the identity comes first. Cycles are
/// laid out left to right, longest first, on the smallest unused points.
std::vector<Permutation> conjugacy_class_reps(int n);

/// All of S_n in lexicographic order of one-line notation. The position in
/// this list is the permutation's rank. Throws RangeError beyond `cap`.
std::vector<Permutation> enumerate_sn(int n, int cap = kMaxEnumerableN);

/// Lexicographic rank among S_n (Lehmer code). Requires n <= 20.
std::uint64_t lex_rank(const Permutation& p);
Permutation lex_unrank(std::size_t n, std::uint64_t rank);

std::uint64_t factorial(int n);

}  // namespace erdos
