#include "erdos/surd.hpp"

#include <algorithm>
#include <cmath>

#include "erdos/errors.hpp"

namespace erdos {

namespace {

// Splits v = s^2 * f with f square-free; returns {s, f}.
std::pair<BigInt, BigInt> square_split(BigInt v) {
  BigInt s = 1;
  BigInt f = 1;
  if (mpz_perfect_square_p(v.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
    return {s, BigInt(1)};
  }
  for (BigInt p = 2; p * p <= v; ++p) {
    int e = 0;
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
      v /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2 == 1) f *= p;
  }
  f *= v;  // leftover prime (or 1)
  return {s, f};
}

BigInt common_radicand(const Surd& x, const Surd& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational()) return x.d();
  if (x.d() != y.d()) throw ArithmeticError("surds over different radicands: " + x.d().get_str() + " and " + y.d().get_str());
  return x.d();
}

}  // namespace

Surd::Surd(Rational a, Rational b, const BigInt& radicand) : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  if (d_ < 0) throw RangeError("negative radicand " + d_.get_str());
  normalise();
}

void Surd::normalise() {
  if (b_.is_zero() || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  auto [s, f] = square_split(d_);
  b_ *= Rational(s);
  if (f == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  } else {
    d_ = f;
  }
}

Surd Surd::sqrt(const Rational& r) {
  if (r.sign() < 0) throw RangeError("square root of negative " + r.str());
  // sqrt(p/q) = sqrt(p q) / q
  const BigInt q = r.den();
  return Surd(Rational(0), Rational(BigInt(1), q), r.num() * q);
}

const Rational& Surd::to_rational() const {
  if (!is_rational()) throw ArithmeticError(str() + " is irrational");
  return a_;
}

int Surd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa >= 0 && sb > 0) return 1;
  if (sa <= 0 && sb < 0) return -1;
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

std::string Surd::str() const {
  if (is_rational()) return a_.str();
  return a_.str() + " + " + b_.str() + "*sqrt(" + d_.get_str() + ")";
}

double Surd::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d()); }

Surd operator+(const Surd& x, const Surd& y) {
  const BigInt d = common_radicand(x, y);
  return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator*(const Surd& x, const Surd& y) {
  const BigInt d = common_radicand(x, y);
  const Rational dq(d);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * dq, x.a_ * y.b_ + x.b_ * y.a_, d);
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::vector<Surd> omega2(const Rational& alpha) {
  if (alpha.sign() < 0 || alpha > Rational(BigInt(1), BigInt(4))) {
    throw RangeError("alpha = " + alpha.str() + " lies outside [0, 1/4]");
  }
  const Surd root = Surd::sqrt(Rational(1) - Rational(4) * alpha);
  const Surd quarter(Rational(BigInt(1), BigInt(4)));
  std::vector<Surd> ps{quarter * (Surd(Rational(1)) - root), quarter * (Surd(Rational(1)) + root),
                       quarter * (Surd(Rational(3)) - root), quarter * (Surd(Rational(3)) + root)};
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

Surd delta2_of_p(const Surd& p) {
  const Surd one(Rational(1));
  const Surd two(Rational(2));
  if (p.sign() < 0 || (one - p).sign() < 0) throw RangeError("p = " + p.str() + " lies outside [0, 1]");
  const Surd q = one - p;
  const Surd larger = std::max(two * p, two * q);
  return larger - two * (p * p + q * q);
}

std::size_t omega2_class_count(const Rational& alpha) {
  std::vector<Surd> reps;
  const Surd one(Rational(1));
  for (const auto& p : omega2(alpha)) reps.push_back(std::min(p, one - p));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps.size();
}

}  // namespace erdos
