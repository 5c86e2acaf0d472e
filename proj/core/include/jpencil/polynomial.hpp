#pragma once

#include <span>
#include <utility>
#include <vector>

#include "jpencil/scalar.hpp"

namespace jpencil {

/// Dense polynomial over a scalar field, coefficients in ascending degree
/// order with exact trailing zeros trimmed. The zero polynomial has an empty
/// coefficient list and degree -1.
template <class S>
class Polynomial {
public:
  Polynomial() = default;

  explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(S value) { return Polynomial({std::move(value)}); }
  static Polynomial identity() {  // the indeterminate itself
    return Polynomial({ScalarTraits<S>::zero(), ScalarTraits<S>::one()});
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  /// Coefficient of degree k; zero beyond the stored range.
  S coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : ScalarTraits<S>::zero();
  }

  const S& leading() const { return c_.back(); }
  std::span<const S> coeffs() const { return c_; }

  Polynomial operator-() const {
    std::vector<S> r;
    r.reserve(c_.size());
    for (const S& x : c_) r.push_back(-x);
    return Polynomial(std::move(r), no_trim{});
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarTraits<S>::zero());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarTraits<S>::zero());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, ScalarTraits<S>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const S& s, const Polynomial& p) { return p.scaled(s); }

  Polynomial scaled(const S& s) const {
    if (jpencil::is_zero(s)) return zero();
    std::vector<S> r;
    r.reserve(c_.size());
    for (const S& x : c_) r.push_back(s * x);
    return Polynomial(std::move(r));
  }

  /// Multiplication by the indeterminate to the k-th power.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return zero();
    std::vector<S> r(c_.size() + k, ScalarTraits<S>::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Polynomial(std::move(r), no_trim{});
  }

  /// Horner evaluation at a point of any compatible type (the scalar itself,
  /// ComplexOf<S>, std::complex<double> for float polynomials, ...).
  template <class P>
  P eval(const P& x) const {
    if (c_.empty()) return P{};
    P acc = P(c_.back());
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
      acc = acc * x + P(c_[k]);
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
      if (!(a.c_[k] == b.c_[k])) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  struct no_trim {};
  Polynomial(std::vector<S> coeffs, no_trim) : c_(std::move(coeffs)) {}

  void trim() {
    while (!c_.empty() && jpencil::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

/// Coefficient-wise conversion, e.g. exact to float via to_double.
template <class To, class From, class F>
Polynomial<To> convert_polynomial(const Polynomial<From>& p, F&& f) {
  std::vector<To> r;
  r.reserve(p.coeffs().size());
  for (const From& c : p.coeffs()) r.push_back(f(c));
  return Polynomial<To>(std::move(r));
}

template <class From>
Polynomial<double> to_float_polynomial(const Polynomial<From>& p) {
  return convert_polynomial<double>(p, [](const From& c) { return to_double(c); });
}

}  // namespace jpencil
