#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "jpencil/complex_of.hpp"
#include "jpencil/quadext.hpp"
#include "jpencil/rational.hpp"

namespace jpencil {

// The scalar modes every generic module is instantiated over:
//   double       IEEE arithmetic, tolerance-based checks
//   Rational     exact arithmetic over Q
//   QuadExt      exact arithmetic over Q(sqrt(d))
// plus ComplexOf<S> over each.

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool is_exact = false;
  static constexpr const char* name = "f64";
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long long n) { return static_cast<double>(n); }
  static bool is_zero(double x) { return x == 0.0; }
  static double conj(double x) { return x; }
  static int sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
  static double to_double(double x) { return x; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr const char* name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long long n) { return Rational(n); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational conj(const Rational& x) { return x; }
  static int sign(const Rational& x) { return x.sign(); }
  static double to_double(const Rational& x) { return x.to_double(); }
};

template <>
struct ScalarTraits<QuadExt> {
  static constexpr bool is_exact = true;
  static constexpr const char* name = "quadext";
  static QuadExt zero() { return QuadExt(0); }
  static QuadExt one() { return QuadExt(1); }
  static QuadExt from_int(long long n) { return QuadExt(n); }
  static bool is_zero(const QuadExt& x) { return x.is_zero(); }
  static QuadExt conj(const QuadExt& x) { return x; }
  static int sign(const QuadExt& x) { return x.sign(); }
  static double to_double(const QuadExt& x) { return x.to_double(); }
};

template <class S>
struct ScalarTraits<ComplexOf<S>> {
  static constexpr bool is_exact = ScalarTraits<S>::is_exact;
  static constexpr const char* name = "complex";
  static ComplexOf<S> zero() { return ComplexOf<S>(ScalarTraits<S>::zero()); }
  static ComplexOf<S> one() { return ComplexOf<S>(ScalarTraits<S>::one()); }
  static ComplexOf<S> from_int(long long n) {
    return ComplexOf<S>(ScalarTraits<S>::from_int(n));
  }
  static bool is_zero(const ComplexOf<S>& x) { return x.is_zero(); }
  static ComplexOf<S> conj(const ComplexOf<S>& x) { return x.conj(); }
};

template <class S>
bool is_zero(const S& x) { return ScalarTraits<S>::is_zero(x); }

template <class S>
S conj_value(const S& x) { return ScalarTraits<S>::conj(x); }

template <class S>
int sign_of(const S& x) { return ScalarTraits<S>::sign(x); }

template <class S>
double to_double(const S& x) { return ScalarTraits<S>::to_double(x); }

/// sqrt(2) in scalar modes that can represent it; the theta1 builtin needs
/// this and is rejected in rational mode.
template <class S>
S sqrt2_value() = delete;
template <>
inline double sqrt2_value<double>() { return std::numbers::sqrt2; }
template <>
inline QuadExt sqrt2_value<QuadExt>() { return QuadExt::sqrt_of(2); }

// Canonical text forms, shared by the CSV/JSON emitters and config parsing.
// Rationals serialize as "p" or "p/q"; quadratic elements as
// "p/q+r/s*sqrt(d)" (compact cases "p/q", "r/s*sqrt(d)" allowed); floats as
// shortest round-trip decimals.
std::string scalar_str(double x);
std::string scalar_str(const Rational& x);
std::string scalar_str(const QuadExt& x);

template <class S>
std::string scalar_str(const ComplexOf<S>& z) {
  return scalar_str(z.re) + " + (" + scalar_str(z.im) + ")*i";
}

template <class S>
S scalar_parse(std::string_view text);
template <>
double scalar_parse<double>(std::string_view text);
template <>
Rational scalar_parse<Rational>(std::string_view text);
template <>
QuadExt scalar_parse<QuadExt>(std::string_view text);

/// |a-b| <= abs + rel*max(|a|,|b|); rel defaults to 0 (absolute-only mode).
struct Tolerance {
  double abs = 0.0;
  double rel = 0.0;
};

inline bool approx_equal(double a, double b, const Tolerance& tol) {
  return std::abs(a - b) <= tol.abs + tol.rel * std::max(std::abs(a), std::abs(b));
}

inline bool approx_equal(std::complex<double> a, std::complex<double> b,
                         const Tolerance& tol) {
  return std::abs(a - b) <= tol.abs + tol.rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace jpencil
