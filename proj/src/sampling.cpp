#include "erdos/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "erdos/errors.hpp"

namespace erdos {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  // Fisher-Yates by hand so the stream is identical across standard libraries.
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(images[i - 1], images[j]);
  }
  return Permutation::from_images(std::move(images));
}

BistochasticMatrix random_bistochastic(std::size_t n, std::mt19937_64& rng, int terms, int max_weight) {
  if (n == 0) throw RangeError("random_bistochastic needs n >= 1");
  if (max_weight < 1) throw RangeError("max_weight must be positive");
  if (terms <= 0) terms = 1 + static_cast<int>(rng() % (n * n));
  std::vector<long> raw(static_cast<std::size_t>(terms));
  long total = 0;
  for (auto& u : raw) {
    u = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_weight));
    total += u;
  }
  RationalMatrix m(n, n);
  for (const long u : raw) {
    const Permutation p = random_permutation(n, rng);
    const Rational w{BigInt(u), BigInt(total)};
    for (std::size_t i = 0; i < n; ++i) m(i, static_cast<std::size_t>(p(i))) += w;
  }
  return BistochasticMatrix::from(std::move(m));
}

}  // namespace erdos
