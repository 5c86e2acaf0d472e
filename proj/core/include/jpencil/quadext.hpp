#pragma once

#include <string>
#include <string_view>

#include "jpencil/errors.hpp"
#include "jpencil/rational.hpp"

namespace jpencil {

/// Element p + q*sqrt(d) of the real quadratic field Q(sqrt(d)), d a positive
/// square-free integer. The radicand is carried with the value and normalized
/// to 0 whenever the radical part vanishes, so plain rationals mix freely with
/// elements of any one field instance; combining nonzero radical parts over
/// different radicands throws FieldMismatch.
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(long long n) : rat_(n) {}
  QuadExt(Rational r) : rat_(std::move(r)) {}
  QuadExt(Rational rational_part, Rational radical_part, long long radicand);

  /// sqrt(d) itself; validates that d is positive and square-free.
  static QuadExt sqrt_of(long long d) { return QuadExt(Rational(0), Rational(1), d); }

  static QuadExt parse(std::string_view text);

  const Rational& rational_part() const { return rat_; }
  const Rational& radical_part() const { return rad_; }
  /// 0 when the value is plain rational.
  long long radicand() const { return d_; }

  bool is_zero() const { return rat_.is_zero() && rad_.is_zero(); }
  bool is_rational() const { return rad_.is_zero(); }

  /// Sign of the real number p + q*sqrt(d).
  int sign() const;

  double to_double() const;
  std::string str() const;

  /// Galois conjugate p - q*sqrt(d); used for exact division.
  QuadExt galois_conjugate() const;

  QuadExt operator-() const;

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b);

  QuadExt& operator+=(const QuadExt& b) { *this = *this + b; return *this; }
  QuadExt& operator-=(const QuadExt& b) { *this = *this - b; return *this; }
  QuadExt& operator*=(const QuadExt& b) { *this = *this * b; return *this; }
  QuadExt& operator/=(const QuadExt& b) { *this = *this / b; return *this; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.rat_ == b.rat_ && a.rad_ == b.rad_ && a.d_ == b.d_;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
  friend bool operator<(const QuadExt& a, const QuadExt& b) { return (a - b).sign() < 0; }
  friend bool operator>(const QuadExt& a, const QuadExt& b) { return (a - b).sign() > 0; }

private:
  // Raw constructor for arithmetic results; normalizes d when rad == 0.
  QuadExt(Rational rat, Rational rad, long long d, int /*raw_tag*/);

  static long long unify_radicand(const QuadExt& a, const QuadExt& b);

  Rational rat_;
  Rational rad_;
  long long d_ = 0;
};

bool is_square_free(long long d);

}  // namespace jpencil
