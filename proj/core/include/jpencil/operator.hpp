#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jpencil/finite_vector.hpp"
#include "jpencil/recurrence.hpp"
#include "jpencil/reports.hpp"

namespace jpencil {

/// u_n = J3 e_n = a_{n-1} e_{n-1} + b_n e_n + a_n e_{n+1}.
template <class S>
FiniteVector<S> j3_column(const JacobiPencil<S>& p, long n) {
  std::vector<S> c(static_cast<std::size_t>(n) + 2, ScalarTraits<S>::zero());
  if (n >= 1) c[static_cast<std::size_t>(n - 1)] = p.a_at(n - 1);
  c[static_cast<std::size_t>(n)] += p.b_at(n);
  c[static_cast<std::size_t>(n + 1)] = p.a_at(n);
  return FiniteVector<S>(std::move(c));
}

/// w_n = J5 e_n = gamma_{n-2} e_{n-2} + beta_{n-1} e_{n-1} + alpha_n e_n
///              + beta_n e_{n+1} + gamma_n e_{n+2}.
template <class S>
FiniteVector<S> j5_column(const JacobiPencil<S>& p, long n) {
  std::vector<S> c(static_cast<std::size_t>(n) + 3, ScalarTraits<S>::zero());
  auto add = [&](long row, const S& v) {
    if (row >= 0) c[static_cast<std::size_t>(row)] += v;
  };
  add(n - 2, p.gamma_at(n - 2));
  add(n - 1, p.beta_at(n - 1));
  add(n, p.alpha_at(n));
  add(n + 1, p.beta_at(n));
  add(n + 2, p.gamma_at(n));
  return FiniteVector<S>(std::move(c));
}

/// The first N+1 columns of the associated operator A in the standard basis:
/// column k = A e_k. Column k is supported in rows 0..k+1 (Hessenberg
/// profile). Applying A to a vector supported beyond column N throws
/// TruncationOverflow rather than silently truncating.
template <class S>
class OperatorTruncation {
public:
  explicit OperatorTruncation(std::vector<FiniteVector<S>> columns)
      : cols_(std::move(columns)) {}

  long max_column() const { return static_cast<long>(cols_.size()) - 1; }

  const FiniteVector<S>& column(std::size_t k) const { return cols_.at(k); }

  FiniteVector<S> apply(const FiniteVector<S>& v) const {
    if (v.max_support() > max_column()) {
      throw TruncationOverflow("applying operator to a vector supported at index " +
                               std::to_string(v.max_support()) +
                               ", truncation has columns 0.." +
                               std::to_string(max_column()));
    }
    FiniteVector<S> out;
    for (std::size_t j = 0; j < v.coords().size(); ++j) {
      out.axpy(v.coords()[j], cols_[j]);
    }
    return out;
  }

  /// Sum of column 2-norms; scales the float-mode verification tolerance.
  double column_norm_sum() const {
    double acc = 0.0;
    for (const auto& col : cols_) acc += norm2(col);
    return acc;
  }

private:
  std::vector<FiniteVector<S>> cols_;
};

/// Builds columns 0..N of the associated operator from
///   A e_0 = (e_1 - beta e_0) / alpha
/// and the recursion obtained by applying A to u_n = J3 e_n:
///   A e_{n+1} = (w_n - a_{n-1} A e_{n-1} - b_n A e_n) / a_n.
template <class S>
OperatorTruncation<S> build_operator(const JacobiPencil<S>& p, long n_max) {
  if (n_max < 0) throw ConfigError("build_operator: need N >= 0");
  std::vector<FiniteVector<S>> cols;
  cols.reserve(static_cast<std::size_t>(n_max) + 1);

  const S inv_alpha = ScalarTraits<S>::one() / p.alpha;
  cols.push_back(FiniteVector<S>({-(p.beta * inv_alpha), inv_alpha}));

  for (long n = 0; n + 1 <= n_max; ++n) {
    FiniteVector<S> rhs = j5_column(p, n);
    if (n >= 1) rhs.axpy(-p.a_at(n - 1), cols[static_cast<std::size_t>(n - 1)]);
    rhs.axpy(-p.b_at(n), cols[static_cast<std::size_t>(n)]);
    FiniteVector<S> col = (ScalarTraits<S>::one() / p.a_at(n)) * rhs;
    if (col.max_support() > n + 2) {
      throw InternalError("operator column " + std::to_string(n + 1) +
                          " violates the Hessenberg profile");
    }
    cols.push_back(std::move(col));
  }
  return OperatorTruncation<S>(std::move(cols));
}

/// Independent route to column k of A, straight from the definition: expand
/// e_k = zeta e_0 + sum_n xi_n u_n by back substitution (the change of basis
/// is triangular because a_n > 0), then apply
///   A e_k = (zeta/alpha)(e_1 - beta e_0) + sum_n xi_n w_n.
/// Cross-checks build_operator at small N.
template <class S>
FiniteVector<S> operator_column_via_basis(const JacobiPencil<S>& p, long k) {
  const S zero = ScalarTraits<S>::zero();
  std::vector<S> xi(static_cast<std::size_t>(std::max<long>(k, 0)), zero);
  S zeta = zero;
  if (k == 0) {
    zeta = ScalarTraits<S>::one();
  } else {
    auto xi_at = [&](long i) -> S {
      return (i >= 0 && i < k) ? xi[static_cast<std::size_t>(i)] : zero;
    };
    // Coordinate k: a_{k-1} xi_{k-1} = 1; coordinate m in [1, k):
    // a_{m-1} xi_{m-1} + b_m xi_m + a_m xi_{m+1} = 0; coordinate 0 fixes zeta.
    xi[static_cast<std::size_t>(k - 1)] = ScalarTraits<S>::one() / p.a_at(k - 1);
    for (long m = k - 1; m >= 1; --m) {
      xi[static_cast<std::size_t>(m - 1)] =
          -(p.b_at(m) * xi_at(m) + p.a_at(m) * xi_at(m + 1)) / p.a_at(m - 1);
    }
    zeta = -(p.b_at(0) * xi_at(0) + p.a_at(0) * xi_at(1));
  }

  const S inv_alpha = ScalarTraits<S>::one() / p.alpha;
  FiniteVector<S> result({-(p.beta * inv_alpha * zeta), inv_alpha * zeta});
  for (long n = 0; n < k; ++n) {
    result.axpy(xi[static_cast<std::size_t>(n)], j5_column(p, n));
  }
  return result;
}

/// f(A) v = sum_k d_k A^k v, with A^0 the identity on finite vectors and
/// f = 0 mapping everything to zero. Each application of A raises the top
/// support index by at most one; exceeding the truncation is an error.
template <class S>
FiniteVector<S> apply_poly(const Polynomial<S>& f, const OperatorTruncation<S>& op,
                           const FiniteVector<S>& v) {
  if (f.is_zero()) return FiniteVector<S>::zero();
  FiniteVector<S> power = v;
  FiniteVector<S> acc = f.coeff(0) * v;
  for (long k = 1; k <= f.degree(); ++k) {
    power = op.apply(power);
    acc.axpy(f.coeff(static_cast<std::size_t>(k)), power);
  }
  return acc;
}

/// The vectors y_n = p_n(A) e_0 for n = 0..N, computed by the five-term
/// recurrence with operator argument:
///   y_0 = e_0, y_1 = alpha A e_0 + beta e_0,
///   gamma_n y_{n+2} = -(gamma_{n-2} y_{n-2} + beta_{n-1} y_{n-1}
///                       - a_{n-1} A y_{n-1} + alpha_n y_n - b_n A y_n
///                       + beta_n y_{n+1} - a_n A y_{n+1}).
/// Identical to apply_poly(p_n, op, e_0) in exact modes (the functional
/// calculus is a ring homomorphism); in float mode this route is numerically
/// stable where the monomial-power sum suffers catastrophic cancellation.
template <class S>
std::vector<FiniteVector<S>> polynomial_vectors_e0(const JacobiPencil<S>& p,
                                                   const OperatorTruncation<S>& op,
                                                   long n_max) {
  std::vector<FiniteVector<S>> y;
  y.reserve(static_cast<std::size_t>(n_max) + 1);
  y.push_back(FiniteVector<S>::basis(0));
  if (n_max >= 1) {
    FiniteVector<S> y1 = p.alpha * op.column(0);
    y1.axpy(p.beta, y[0]);
    y.push_back(std::move(y1));
  }

  std::vector<FiniteVector<S>> ay;  // ay[k] = A y_k
  ay.push_back(op.column(0));
  if (n_max >= 1) ay.push_back(op.apply(y[1]));

  for (long n = 0; n + 2 <= n_max; ++n) {
    auto y_at = [&](long k) -> const FiniteVector<S>& {
      static const FiniteVector<S> zero;
      return k < 0 ? zero : y[static_cast<std::size_t>(k)];
    };
    FiniteVector<S> sum = p.gamma_at(n - 2) * y_at(n - 2);
    sum.axpy(p.beta_at(n - 1), y_at(n - 1));
    if (n >= 1) sum.axpy(-p.a_at(n - 1), ay[static_cast<std::size_t>(n - 1)]);
    sum.axpy(p.alpha_at(n), y_at(n));
    sum.axpy(-p.b_at(n), ay[static_cast<std::size_t>(n)]);
    sum.axpy(p.beta_at(n), y_at(n + 1));
    sum.axpy(-p.a_at(n), ay[static_cast<std::size_t>(n + 1)]);
    y.push_back((-(ScalarTraits<S>::one() / p.gamma_at(n))) * sum);
    if (n + 3 <= n_max) ay.push_back(op.apply(y.back()));
  }
  return y;
}

namespace detail {

inline double operator_tolerance(double column_norm_sum) {
  return 1e-12 * column_norm_sum;
}

}  // namespace detail

/// Checks e_n = p_n(A) e_0 for n = 0..N. Exact equality in exact modes;
/// float mode compares coordinates within 1e-12 * kappa(N), kappa the sum of
/// column norms of the truncation.
template <class S>
CheckReport verify_basis_identity(const JacobiPencil<S>& p, long n_max) {
  const auto op = build_operator(p, n_max);
  const auto y = polynomial_vectors_e0(p, op, n_max);

  CheckReport report;
  report.name = "basis_identity";
  report.exact_mode = ScalarTraits<S>::is_exact;
  report.tolerance = report.exact_mode ? 0.0 : detail::operator_tolerance(op.column_norm_sum());
  report.tolerance_rule = report.exact_mode
                              ? "exact equality"
                              : "1e-12 * kappa(N), kappa = sum of operator column norms";
  bool all_equal = true;
  for (long n = 0; n <= n_max; ++n) {
    const FiniteVector<S>& lhs = y[static_cast<std::size_t>(n)];
    const FiniteVector<S> expected = FiniteVector<S>::basis(static_cast<std::size_t>(n));
    const double dev = max_abs_diff(lhs, expected);
    report.max_deviation = std::max(report.max_deviation, dev);
    ++report.checks_run;
    if constexpr (ScalarTraits<S>::is_exact) {
      if (!(lhs == expected)) {
        all_equal = false;
        report.record_failure("p_" + std::to_string(n) + "(A)e_0 != e_" + std::to_string(n));
      }
    }
  }
  report.passed = report.exact_mode ? all_equal : report.max_deviation <= report.tolerance;
  return report;
}

/// Gram matrix G_{nm} = (p_n(A)e_0, p_m(A)e_0) for n, m = 0..N.
template <class S>
std::vector<std::vector<S>> gram_matrix(const JacobiPencil<S>& p, long n_max) {
  const auto op = build_operator(p, n_max);
  const auto y = polynomial_vectors_e0(p, op, n_max);

  std::vector<std::vector<S>> g(y.size());
  for (std::size_t n = 0; n < y.size(); ++n) {
    g[n].reserve(y.size());
    for (std::size_t m = 0; m < y.size(); ++m) {
      g[n].push_back(inner_product(y[n], y[m]));
    }
  }
  return g;
}

/// Checks that the Gram matrix is the identity (orthonormality of the
/// associated polynomials under the operator calculus).
template <class S>
CheckReport verify_orthonormality(const JacobiPencil<S>& p, long n_max) {
  const auto g = gram_matrix(p, n_max);

  CheckReport report;
  report.name = "orthonormality";
  report.exact_mode = ScalarTraits<S>::is_exact;
  if (!report.exact_mode) {
    const auto op = build_operator(p, n_max);
    report.tolerance = detail::operator_tolerance(op.column_norm_sum());
    report.tolerance_rule = "1e-12 * kappa(N), kappa = sum of operator column norms";
  } else {
    report.tolerance_rule = "exact equality";
  }

  bool all_equal = true;
  for (std::size_t n = 0; n < g.size(); ++n) {
    for (std::size_t m = 0; m < g.size(); ++m) {
      const S expected = n == m ? ScalarTraits<S>::one() : ScalarTraits<S>::zero();
      const double dev = std::abs(to_double(g[n][m]) - to_double(expected));
      report.max_deviation = std::max(report.max_deviation, dev);
      ++report.checks_run;
      if constexpr (ScalarTraits<S>::is_exact) {
        if (!(g[n][m] == expected)) {
          all_equal = false;
          report.record_failure("G[" + std::to_string(n) + "][" + std::to_string(m) +
                                "] != " + scalar_str(expected));
        }
      }
    }
  }
  report.passed = report.exact_mode ? all_equal : report.max_deviation <= report.tolerance;
  return report;
}

/// Checks that y_n = e_n solves the five-term vector recurrence
///   gamma_{n-2} y_{n-2} + beta_{n-1} y_{n-1} - a_{n-1} A y_{n-1}
///     + alpha_n y_n - b_n A y_n + beta_n y_{n+1} - a_n A y_{n+1}
///     + gamma_n y_{n+2} = 0,   n = 0..N-2.
template <class S>
CheckReport verify_vector_recurrence(const JacobiPencil<S>& p, long n_max) {
  const auto op = build_operator(p, std::max<long>(n_max - 1, 0));

  CheckReport report;
  report.name = "vector_recurrence";
  report.exact_mode = ScalarTraits<S>::is_exact;
  report.tolerance = report.exact_mode ? 0.0 : detail::operator_tolerance(op.column_norm_sum());
  report.tolerance_rule = report.exact_mode
                              ? "exact equality"
                              : "1e-12 * kappa(N), kappa = sum of operator column norms";

  auto basis = [](long k) {
    return k < 0 ? FiniteVector<S>::zero() : FiniteVector<S>::basis(static_cast<std::size_t>(k));
  };
  auto a_col = [&](long k) -> const FiniteVector<S>& {
    return op.column(static_cast<std::size_t>(k));
  };

  bool all_zero = true;
  for (long n = 0; n + 2 <= n_max; ++n) {
    FiniteVector<S> r = p.gamma_at(n - 2) * basis(n - 2);
    r.axpy(p.beta_at(n - 1), basis(n - 1));
    if (n >= 1) r.axpy(-p.a_at(n - 1), a_col(n - 1));
    r.axpy(p.alpha_at(n), basis(n));
    r.axpy(-p.b_at(n), a_col(n));
    r.axpy(p.beta_at(n), basis(n + 1));
    r.axpy(-p.a_at(n), a_col(n + 1));
    r.axpy(p.gamma_at(n), basis(n + 2));

    const double dev = norm2(r);
    report.max_deviation = std::max(report.max_deviation, dev);
    ++report.checks_run;
    if (!r.is_zero()) {
      if constexpr (ScalarTraits<S>::is_exact) {
        all_zero = false;
        report.record_failure("vector recurrence residual at n = " + std::to_string(n));
      }
    }
  }
  report.passed = report.exact_mode ? all_zero : report.max_deviation <= report.tolerance;
  return report;
}

}  // namespace jpencil
