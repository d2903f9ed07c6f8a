#include "erdos/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "erdos/errors.hpp"

namespace erdos {

namespace {

void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw DimensionError("permutations of different sizes: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

// Partitions of `remaining` into non-increasing parts bounded by `max_part`.
void partitions(int remaining, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[v]) {
      throw RangeError("not a permutation: image " + std::to_string(v) + " out of range or repeated");
    }
    seen[v] = 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> zero_based(images.size());
  std::transform(images.begin(), images.end(), zero_based.begin(), [](int v) { return v - 1; });
  return from_images(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k] - 1;
      const int to = cycle[(k + 1) % cycle.size()] - 1;
      if (from < 0 || static_cast<std::size_t>(from) >= n || used[from]) {
        throw RangeError("invalid cycle point " + std::to_string(cycle[k]));
      }
      used[from] = 1;
      images[from] = to;
    }
  }
  return from_images(std::move(images));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

int Permutation::fixed_points() const noexcept {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == static_cast<int>(i);
  return count;
}

std::string Permutation::cycle_notation() const {
  const bool commas = size() > 9;
  std::string out;
  std::vector<char> visited(size(), 0);
  for (std::size_t start = 0; start < size(); ++start) {
    if (visited[start] || images_[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!visited[i]) {
      visited[i] = 1;
      if (!first && commas) out += ',';
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(images_[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  std::vector<int> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = a(static_cast<std::size_t>(b(i)));
  return Permutation::from_images(std::move(images));
}

int agreement_count(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += a(i) == b(i);
  return count;
}

CycleType cycle_type(const Permutation& p) {
  CycleType type;
  std::vector<char> visited(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    for (std::size_t i = start; !visited[i]; i = static_cast<std::size_t>(p(i))) {
      visited[i] = 1;
      ++length;
    }
    type.parts.push_back(length);
  }
  std::sort(type.parts.begin(), type.parts.end(), std::greater<>());
  return type;
}

std::vector<Permutation> conjugacy_class_reps(int n) {
  if (n < 1) throw RangeError("conjugacy_class_reps requires n >= 1");
  std::vector<std::vector<int>> ascending;
  std::vector<int> current;
  partitions(n, n, current, ascending);
  std::sort(ascending.begin(), ascending.end());

  std::vector<Permutation> reps;
  reps.reserve(ascending.size());
  for (const auto& parts : ascending) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : parts) {
      std::vector<int> cycle(static_cast<std::size_t>(len));
      std::iota(cycle.begin(), cycle.end(), next);
      next += len;
      cycles.push_back(std::move(cycle));
    }
    reps.push_back(Permutation::from_cycles(static_cast<std::size_t>(n), cycles));
  }
  return reps;
}

std::vector<Permutation> enumerate_sn(int n, int cap) {
  if (n < 1) throw RangeError("enumerate_sn requires n >= 1");
  if (n > cap) {
    throw RangeError("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> all;
  all.reserve(factorial(n));
  do {
    all.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return all;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t lex_rank(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  if (n > 20) throw RangeError("lex_rank supports n <= 20");
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j) smaller_after += p(j) < p(i);
    rank += static_cast<std::uint64_t>(smaller_after) * factorial(n - 1 - i);
  }
  return rank;
}

Permutation lex_unrank(std::size_t n, std::uint64_t rank) {
  if (n > 20) throw RangeError("lex_unrank supports n <= 20");
  if (rank >= factorial(static_cast<int>(n))) throw RangeError("rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(static_cast<int>(n - 1 - i));
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace erdos
