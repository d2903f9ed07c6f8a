#pragma once

#include <string>
#include <vector>

#include "erdos/rational.hpp"

namespace erdos {

/// Exact a + b*sqrt(d) with d a square-free nonnegative integer. Normalised
/// so that b = 0 whenever d is 0 or 1 (the value is then rational, d = 0).
class Surd {
 public:
  Surd() = default;
  Surd(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  /// Any nonnegative radicand; square factors are pulled into b.
  Surd(Rational a, Rational b, const BigInt& radicand);

  /// sqrt(r) for rational r >= 0, as (1/q) * sqrt(p q) with the square part
  /// extracted. Throws RangeError for negative r.
  static Surd sqrt(const Rational& r);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const BigInt& d() const noexcept { return d_; }

  bool is_rational() const noexcept { return b_.is_zero(); }
  /// Throws ArithmeticError unless rational.
  const Rational& to_rational() const;

  int sign() const;

  /// "a + b*sqrt(d)"; only "a" when rational.
  std::string str() const;
  double to_double() const;

  Surd operator-() const { return Surd(-a_, -b_, d_); }
  /// Mixed radicands throw ArithmeticError.
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }
  friend Surd operator*(const Surd& x, const Surd& y);

  friend bool operator==(const Surd&, const Surd&) = default;
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

 private:
  void normalise();
  Rational a_;
  Rational b_;
  BigInt d_ = 0;
};

/// All p in [0, 1] with delta of [[p, 1-p], [1-p, p]] equal to alpha, i.e.
/// p in {(1 +- sqrt(1-4 alpha))/4, (3 +- sqrt(1-4 alpha))/4}, ascending and
/// without duplicates. Throws RangeError unless 0 <= alpha <= 1/4.
std::vector<Surd> omega2(const Rational& alpha);

/// max(2p, 2(1-p)) - 2(p^2 + (1-p)^2), exactly. Throws RangeError unless
/// 0 <= p <= 1.
Surd delta2_of_p(const Surd& p);

/// Number of classes among omega2(alpha) after identifying p with 1 - p.
std::size_t omega2_class_count(const Rational& alpha);

}  // namespace erdos
