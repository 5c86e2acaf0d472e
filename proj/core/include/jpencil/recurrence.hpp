#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jpencil/pencil.hpp"
#include "jpencil/polynomial.hpp"

namespace jpencil {

/// The associated polynomials p_0..p_N of a pencil, generated by the
/// five-term recurrence. Satisfies the recurrence identity exactly in exact
/// scalar modes (see five_term_residual).
template <class S>
struct PolynomialSystem {
  JacobiPencil<S> pencil;
  std::vector<Polynomial<S>> polys;  // polys[n] = p_n, n = 0..N

  long max_degree() const { return static_cast<long>(polys.size()) - 1; }
  const Polynomial<S>& p(std::size_t n) const { return polys.at(n); }
};

namespace detail {

// (c - lambda*k) * p  ==  c*p - k*shift(p)
template <class S>
Polynomial<S> affine_term(const S& c, const S& k, const Polynomial<S>& p) {
  return p.scaled(c) - p.shifted(1).scaled(k);
}

}  // namespace detail

/// Generates p_0 = 1, p_1 = alpha*x + beta, and then solves the five-term
/// recurrence for p_{n+2}, n = 0..N-2:
///   gamma_{n-2} p_{n-2} + (beta_{n-1} - x a_{n-1}) p_{n-1}
///     + (alpha_n - x b_n) p_n + (beta_n - x a_n) p_{n+1} + gamma_n p_{n+2} = 0
/// with p_{-2} = p_{-1} = 0 and zero coefficients at negative indices.
/// Each p_n has degree exactly n with positive leading coefficient; a
/// violation signals an invalid pencil and throws InternalError.
template <class S>
PolynomialSystem<S> generate(const JacobiPencil<S>& pencil, long n_max) {
  if (n_max < 1) throw ConfigError("generate: need N >= 1");
  if (n_max >= 2 && pencil.max_index() < n_max - 2) {
    throw SequenceExhausted("pencil sequences defined up to index " +
                            std::to_string(pencil.max_index()) + ", need " +
                            std::to_string(n_max - 2));
  }

  std::vector<Polynomial<S>> p;
  p.reserve(static_cast<std::size_t>(n_max) + 1);
  p.push_back(Polynomial<S>::constant(ScalarTraits<S>::one()));
  p.push_back(Polynomial<S>({pencil.beta, pencil.alpha}));

  auto p_at = [&](long k) -> Polynomial<S> {
    return k < 0 ? Polynomial<S>::zero() : p[static_cast<std::size_t>(k)];
  };

  for (long n = 0; n + 2 <= n_max; ++n) {
    Polynomial<S> sum = p_at(n - 2).scaled(pencil.gamma_at(n - 2));
    sum = sum + detail::affine_term(pencil.beta_at(n - 1), pencil.a_at(n - 1), p_at(n - 1));
    sum = sum + detail::affine_term(pencil.alpha_at(n), pencil.b_at(n), p_at(n));
    sum = sum + detail::affine_term(pencil.beta_at(n), pencil.a_at(n), p_at(n + 1));
    Polynomial<S> next = (-sum).scaled(ScalarTraits<S>::one() / pencil.gamma_at(n));

    if (next.degree() != n + 2 || sign_of(next.leading()) <= 0) {
      throw InternalError("generated p_" + std::to_string(n + 2) +
                          " violates degree/leading-coefficient invariant");
    }
    p.push_back(std::move(next));
  }
  return PolynomialSystem<S>{pencil, std::move(p)};
}

/// Left-hand side of the five-term recurrence at index n, as a polynomial.
/// Identically zero for every generated system (exactly, in exact modes).
template <class S>
Polynomial<S> five_term_residual(const PolynomialSystem<S>& sys, long n) {
  if (n < 0 || n + 2 > sys.max_degree()) {
    throw ConfigError("five_term_residual: index " + std::to_string(n) +
                      " out of range for system of size " +
                      std::to_string(sys.max_degree()));
  }
  const JacobiPencil<S>& pc = sys.pencil;
  auto p_at = [&](long k) -> Polynomial<S> {
    return k < 0 ? Polynomial<S>::zero() : sys.polys[static_cast<std::size_t>(k)];
  };
  Polynomial<S> sum = p_at(n - 2).scaled(pc.gamma_at(n - 2));
  sum = sum + detail::affine_term(pc.beta_at(n - 1), pc.a_at(n - 1), p_at(n - 1));
  sum = sum + detail::affine_term(pc.alpha_at(n), pc.b_at(n), p_at(n));
  sum = sum + detail::affine_term(pc.beta_at(n), pc.a_at(n), p_at(n + 1));
  sum = sum + p_at(n + 2).scaled(pc.gamma_at(n));
  return sum;
}

}  // namespace jpencil
