#pragma once

#include <complex>

#include "jpencil/errors.hpp"

namespace jpencil {

/// Complex pair over any real scalar field; componentwise field arithmetic,
/// conjugation negates the imaginary part. Division is exact over exact base
/// fields (multiply by the conjugate, divide by the squared modulus).
template <class S>
struct ComplexOf {
  S re{};
  S im{};

  ComplexOf() = default;
  ComplexOf(S real) : re(std::move(real)) {}
  ComplexOf(S real, S imag) : re(std::move(real)), im(std::move(imag)) {}

  static ComplexOf i() { return ComplexOf(S(0), S(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ComplexOf conj() const { return ComplexOf(re, -im); }

  /// Squared modulus re^2 + im^2 (an element of the base field).
  S norm() const { return re * re + im * im; }

  ComplexOf operator-() const { return ComplexOf(-re, -im); }

  friend ComplexOf operator+(const ComplexOf& a, const ComplexOf& b) {
    return ComplexOf(a.re + b.re, a.im + b.im);
  }
  friend ComplexOf operator-(const ComplexOf& a, const ComplexOf& b) {
    return ComplexOf(a.re - b.re, a.im - b.im);
  }
  friend ComplexOf operator*(const ComplexOf& a, const ComplexOf& b) {
    return ComplexOf(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend ComplexOf operator/(const ComplexOf& a, const ComplexOf& b) {
    if (b.is_zero()) throw DivisionByZero("complex division by zero");
    const S n = b.norm();
    const ComplexOf num = a * b.conj();
    return ComplexOf(num.re / n, num.im / n);
  }

  ComplexOf& operator+=(const ComplexOf& b) { *this = *this + b; return *this; }
  ComplexOf& operator-=(const ComplexOf& b) { *this = *this - b; return *this; }
  ComplexOf& operator*=(const ComplexOf& b) { *this = *this * b; return *this; }

  friend bool operator==(const ComplexOf& a, const ComplexOf& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexOf& a, const ComplexOf& b) { return !(a == b); }
};

template <class S>
std::complex<double> to_std_complex(const ComplexOf<S>& z) {
  return {z.re.to_double(), z.im.to_double()};
}

}  // namespace jpencil
