#include "jpencil/quadext.hpp"

#include <cmath>

namespace jpencil {

bool is_square_free(long long d) {
  if (d <= 0) return false;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

QuadExt::QuadExt(Rational rational_part, Rational radical_part, long long radicand)
    : rat_(std::move(rational_part)), rad_(std::move(radical_part)), d_(radicand) {
  if (rad_.is_zero()) {
    d_ = 0;
    return;
  }
  if (d_ == 1 || !is_square_free(d_)) {
    throw FieldMismatch("radicand must be a square-free integer > 1, got " +
                        std::to_string(radicand));
  }
}

QuadExt::QuadExt(Rational rat, Rational rad, long long d, int)
    : rat_(std::move(rat)), rad_(std::move(rad)), d_(d) {
  if (rad_.is_zero()) d_ = 0;
}

long long QuadExt::unify_radicand(const QuadExt& a, const QuadExt& b) {
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
  throw FieldMismatch("mixed radicands sqrt(" + std::to_string(a.d_) + ") and sqrt(" +
                      std::to_string(b.d_) + ")");
}

int QuadExt::sign() const {
  const int sr = rat_.sign();
  const int sq = rad_.sign();
  if (sq == 0) return sr;
  if (sr == 0) return sq;
  if (sr == sq) return sr;
  // Opposite signs: compare |rat|^2 against |rad|^2 * d.
  const Rational lhs = rat_ * rat_;
  const Rational rhs = rad_ * rad_ * Rational(d_);
  if (lhs == rhs) return 0;  // unreachable for square-free d, kept for safety
  return (lhs > rhs) ? sr : sq;
}

double QuadExt::to_double() const {
  if (rad_.is_zero()) return rat_.to_double();
  return rat_.to_double() + rad_.to_double() * std::sqrt(static_cast<double>(d_));
}

QuadExt QuadExt::galois_conjugate() const { return QuadExt(rat_, -rad_, d_, 0); }

QuadExt QuadExt::operator-() const { return QuadExt(-rat_, -rad_, d_, 0); }

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
  const long long d = QuadExt::unify_radicand(a, b);
  return QuadExt(a.rat_ + b.rat_, a.rad_ + b.rad_, d, 0);
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
  const long long d = QuadExt::unify_radicand(a, b);
  return QuadExt(a.rat_ - b.rat_, a.rad_ - b.rad_, d, 0);
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  const long long d = QuadExt::unify_radicand(a, b);
  return QuadExt(a.rat_ * b.rat_ + a.rad_ * b.rad_ * Rational(d),
                 a.rat_ * b.rad_ + a.rad_ * b.rat_, d, 0);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
  if (b.is_zero()) throw DivisionByZero("quadratic-field division by zero");
  // 1/(p + q*sqrt(d)) = (p - q*sqrt(d)) / (p^2 - q^2 d); the denominator is
  // nonzero for nonzero b since sqrt(d) is irrational.
  const QuadExt num = a * b.galois_conjugate();
  const Rational den = b.rat_ * b.rat_ - b.rad_ * b.rad_ * Rational(b.d_);
  return QuadExt(num.rat_ / den, num.rad_ / den, num.d_ == 0 ? b.d_ : num.d_, 0);
}

}  // namespace jpencil
