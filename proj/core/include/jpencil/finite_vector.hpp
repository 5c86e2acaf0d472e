#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "jpencil/scalar.hpp"

namespace jpencil {

/// Finitely supported coordinate vector in the standard basis e_0, e_1, ...
/// Trailing zeros are trimmed; the inner product conjugates the second
/// argument, matching the l_2 convention.
template <class S>
class FiniteVector {
public:
  FiniteVector() = default;
  explicit FiniteVector(std::vector<S> coords) : c_(std::move(coords)) { trim(); }

  static FiniteVector zero() { return FiniteVector(); }

  static FiniteVector basis(std::size_t k) {
    std::vector<S> c(k + 1, ScalarTraits<S>::zero());
    c[k] = ScalarTraits<S>::one();
    return FiniteVector(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  /// Largest index with a stored coordinate; -1 for the zero vector.
  long max_support() const { return static_cast<long>(c_.size()) - 1; }

  S coord(std::size_t k) const {
    return k < c_.size() ? c_[k] : ScalarTraits<S>::zero();
  }

  const std::vector<S>& coords() const { return c_; }

  FiniteVector operator-() const {
    std::vector<S> r;
    r.reserve(c_.size());
    for (const S& x : c_) r.push_back(-x);
    return FiniteVector(std::move(r));
  }

  friend FiniteVector operator+(const FiniteVector& a, const FiniteVector& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarTraits<S>::zero());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coord(k) + b.coord(k);
    return FiniteVector(std::move(r));
  }

  friend FiniteVector operator-(const FiniteVector& a, const FiniteVector& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarTraits<S>::zero());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coord(k) - b.coord(k);
    return FiniteVector(std::move(r));
  }

  friend FiniteVector operator*(const S& s, const FiniteVector& v) {
    if (jpencil::is_zero(s)) return zero();
    std::vector<S> r;
    r.reserve(v.c_.size());
    for (const S& x : v.c_) r.push_back(s * x);
    return FiniteVector(std::move(r));
  }

  FiniteVector& operator+=(const FiniteVector& b) { *this = *this + b; return *this; }
  FiniteVector& operator-=(const FiniteVector& b) { *this = *this - b; return *this; }

  /// Add s * v in place.
  void axpy(const S& s, const FiniteVector& v) {
    if (jpencil::is_zero(s) || v.is_zero()) return;
    if (c_.size() < v.c_.size()) c_.resize(v.c_.size(), ScalarTraits<S>::zero());
    for (std::size_t k = 0; k < v.c_.size(); ++k) c_[k] += s * v.c_[k];
    trim();
  }

  friend bool operator==(const FiniteVector& a, const FiniteVector& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
      if (!(a.c_[k] == b.c_[k])) return false;
    }
    return true;
  }
  friend bool operator!=(const FiniteVector& a, const FiniteVector& b) { return !(a == b); }

private:
  void trim() {
    while (!c_.empty() && jpencil::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

/// (u, v) = sum_k u_k * conj(v_k).
template <class S>
S inner_product(const FiniteVector<S>& u, const FiniteVector<S>& v) {
  S acc = ScalarTraits<S>::zero();
  const std::size_t n = std::min(u.coords().size(), v.coords().size());
  for (std::size_t k = 0; k < n; ++k) {
    acc += u.coords()[k] * conj_value(v.coords()[k]);
  }
  return acc;
}

template <class S>
double norm2(const FiniteVector<S>& v) {
  double acc = 0.0;
  for (const S& x : v.coords()) {
    const double d = to_double(x);
    acc += d * d;
  }
  return std::sqrt(acc);
}

/// Largest coordinate magnitude of u - v, measured in double.
template <class S>
double max_abs_diff(const FiniteVector<S>& u, const FiniteVector<S>& v) {
  double m = 0.0;
  const long top = std::max(u.max_support(), v.max_support());
  for (long k = 0; k <= top; ++k) {
    m = std::max(m, std::abs(to_double(u.coord(k)) - to_double(v.coord(k))));
  }
  return m;
}

}  // namespace jpencil
