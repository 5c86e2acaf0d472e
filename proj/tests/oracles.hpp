#pragma once

#include <vector>

#include "jpencil/pencil.hpp"
#include "jpencil/polynomial.hpp"

// Independent reference implementations the tests check the library against.
// These deliberately avoid the library's code paths: the three-term
// recurrence below knows nothing about pencils, and the band oracle squares
// the dense matrix directly.
namespace jpencil::testing {

/// Orthonormal polynomials from the classical three-term recurrence
///   a_n p_{n+1} = (x - b_n) p_n - a_{n-1} p_{n-1},  p_0 = 1.
template <class S>
std::vector<Polynomial<S>> three_term_polynomials(const std::vector<S>& a,
                                                  const std::vector<S>& b, long n_max) {
  std::vector<Polynomial<S>> p;
  p.push_back(Polynomial<S>::constant(ScalarTraits<S>::one()));
  if (n_max >= 1) {
    for (long n = 0; n + 1 <= n_max; ++n) {
      const auto an = a.at(static_cast<std::size_t>(n));
      const auto bn = b.at(static_cast<std::size_t>(n));
      Polynomial<S> rhs = p.back().shifted(1) - p.back().scaled(bn);
      if (n >= 1) {
        rhs = rhs - p[static_cast<std::size_t>(n - 1)].scaled(a.at(static_cast<std::size_t>(n - 1)));
      }
      p.push_back(rhs.scaled(ScalarTraits<S>::one() / an));
    }
  }
  return p;
}

/// Dense (size x size) truncation of the tridiagonal matrix with diagonal b
/// and off-diagonal a.
template <class S>
std::vector<std::vector<S>> dense_tridiagonal(const std::vector<S>& a,
                                              const std::vector<S>& b, std::size_t size) {
  std::vector<std::vector<S>> m(size, std::vector<S>(size, ScalarTraits<S>::zero()));
  for (std::size_t i = 0; i < size; ++i) {
    m[i][i] = b.at(i);
    if (i + 1 < size) {
      m[i][i + 1] = a.at(i);
      m[i + 1][i] = a.at(i);
    }
  }
  return m;
}

template <class S>
std::vector<std::vector<S>> dense_multiply(const std::vector<std::vector<S>>& x,
                                           const std::vector<std::vector<S>>& y) {
  const std::size_t n = x.size();
  std::vector<std::vector<S>> r(n, std::vector<S>(n, ScalarTraits<S>::zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (jpencil::is_zero(x[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        r[i][j] += x[i][k] * y[k][j];
      }
    }
  }
  return r;
}

}  // namespace jpencil::testing
