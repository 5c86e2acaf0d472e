#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jpencil/errors.hpp"
#include "jpencil/reports.hpp"
#include "jpencil/scalar.hpp"

namespace jpencil {

/// A Jacobi-type pencil (J3, J5, alpha, beta): J3 the symmetric tridiagonal
/// matrix with diagonal b and off-diagonal a > 0; J5 the symmetric
/// five-diagonal matrix with diagonal alpha_seq, first off-diagonal beta_seq
/// and second off-diagonal gamma_seq > 0; alpha > 0 and beta the coefficients
/// of the first associated polynomial alpha*x + beta.
///
/// Sequences are finite; max_index() is the largest n every band provides.
/// Negative indices read as zero, matching the recurrence conventions.
/// Pencils are immutable once built and safe to share across threads.
template <class S>
struct JacobiPencil {
  std::vector<S> a;          // J3 off-diagonal, a_k > 0
  std::vector<S> b;          // J3 diagonal
  std::vector<S> alpha_seq;  // J5 diagonal
  std::vector<S> beta_seq;   // J5 first off-diagonal
  std::vector<S> gamma_seq;  // J5 second off-diagonal, gamma_n > 0
  S alpha{};
  S beta{};

  long max_index() const {
    const std::size_t m = std::min({a.size(), b.size(), alpha_seq.size(),
                                    beta_seq.size(), gamma_seq.size()});
    return static_cast<long>(m) - 1;
  }

  S a_at(long k) const { return at(a, "a", k); }
  S b_at(long k) const { return at(b, "b", k); }
  S alpha_at(long k) const { return at(alpha_seq, "alpha_seq", k); }
  S beta_at(long k) const { return at(beta_seq, "beta_seq", k); }
  S gamma_at(long k) const { return at(gamma_seq, "gamma_seq", k); }

private:
  static S at(const std::vector<S>& v, const char* name, long k) {
    if (k < 0) return ScalarTraits<S>::zero();
    if (static_cast<std::size_t>(k) >= v.size()) {
      throw SequenceExhausted(std::string(name) + " has no entry at index " +
                              std::to_string(k));
    }
    return v[static_cast<std::size_t>(k)];
  }
};

/// Checks the definition constraints: a_k > 0, gamma_n > 0, alpha > 0.
/// Positivity is strict with no tolerance in float mode. In quadratic-field
/// mode additionally checks that every entry lies in one field instance
/// (expected_radicand, or the radicand inferred from the entries).
template <class S>
ValidationReport validate_pencil(const JacobiPencil<S>& p,
                                 long long expected_radicand = 0) {
  ValidationReport report;
  auto require_positive = [&](const std::vector<S>& v, const char* field) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sign_of(v[k]) <= 0) {
        report.violations.push_back(
            {field, k, std::string(field) + "[" + std::to_string(k) + "] must be > 0"});
      }
    }
  };
  require_positive(p.a, "a");
  require_positive(p.gamma_seq, "gamma_seq");
  if (sign_of(p.alpha) <= 0) {
    report.violations.push_back({"alpha", std::nullopt, "alpha must be > 0"});
  }

  if constexpr (std::is_same_v<S, QuadExt>) {
    long long d = expected_radicand;
    auto check_field = [&](const S& x, const std::string& where) {
      if (x.radicand() == 0) return;
      if (d == 0) {
        d = x.radicand();
      } else if (x.radicand() != d) {
        report.violations.push_back(
            {where, std::nullopt,
             where + " lies in Q(sqrt(" + std::to_string(x.radicand()) +
                 ")), expected Q(sqrt(" + std::to_string(d) + "))"});
      }
    };
    auto check_seq = [&](const std::vector<S>& v, const char* field) {
      for (std::size_t k = 0; k < v.size(); ++k) {
        check_field(v[k], std::string(field) + "[" + std::to_string(k) + "]");
      }
    };
    check_seq(p.a, "a");
    check_seq(p.b, "b");
    check_seq(p.alpha_seq, "alpha_seq");
    check_seq(p.beta_seq, "beta_seq");
    check_seq(p.gamma_seq, "gamma_seq");
    check_field(p.alpha, "alpha");
    check_field(p.beta, "beta");
  }
  return report;
}

/// Embeds a classical orthonormal-polynomial recurrence (Jacobi matrix with
/// off-diagonal a > 0 and diagonal b) as the pencil with J5 = J3^2:
///   alpha_n = a_{n-1}^2 + b_n^2 + a_n^2   (a_{-1} = 0)
///   beta_n  = a_n (b_n + b_{n+1})
///   gamma_n = a_n a_{n+1}
/// and p_1 = (x - b_0)/a_0, i.e. alpha = 1/a_0, beta = -b_0/a_0.
template <class S>
JacobiPencil<S> from_oprl(std::vector<S> a, std::vector<S> b) {
  if (a.empty() || b.empty()) throw ConfigError("from_oprl: empty coefficient sequence");
  JacobiPencil<S> p;
  const std::size_t na = a.size();
  const std::size_t nb = b.size();

  const std::size_t n_alpha = std::min(na, nb);  // alpha_n needs a_n and b_n
  p.alpha_seq.reserve(n_alpha);
  for (std::size_t n = 0; n < n_alpha; ++n) {
    S prev = (n == 0) ? ScalarTraits<S>::zero() : a[n - 1];
    p.alpha_seq.push_back(prev * prev + b[n] * b[n] + a[n] * a[n]);
  }

  const std::size_t n_beta = std::min(na, nb >= 1 ? nb - 1 : 0);  // needs b_{n+1}
  p.beta_seq.reserve(n_beta);
  for (std::size_t n = 0; n < n_beta; ++n) {
    p.beta_seq.push_back(a[n] * (b[n] + b[n + 1]));
  }

  const std::size_t n_gamma = na >= 1 ? na - 1 : 0;  // needs a_{n+1}
  p.gamma_seq.reserve(n_gamma);
  for (std::size_t n = 0; n < n_gamma; ++n) {
    p.gamma_seq.push_back(a[n] * a[n + 1]);
  }

  p.alpha = ScalarTraits<S>::one() / a[0];
  p.beta = -(b[0] / a[0]);
  p.a = std::move(a);
  p.b = std::move(b);
  return p;
}

/// The basic example pencil: a_k = sqrt(2), b_k = 2, alpha_n = beta_n = 0,
/// gamma_n = 1, alpha = beta = sqrt(2). Requires a scalar mode that
/// represents sqrt(2): QuadExt over radicand 2, or f64.
template <class S>
JacobiPencil<S> theta1_pencil(long max_index) {
  if (max_index < 0) throw ConfigError("theta1: max_index must be >= 0");
  const S root2 = sqrt2_value<S>();
  const std::size_t n = static_cast<std::size_t>(max_index) + 1;
  JacobiPencil<S> p;
  p.a.assign(n, root2);
  p.b.assign(n, ScalarTraits<S>::from_int(2));
  p.alpha_seq.assign(n, ScalarTraits<S>::zero());
  p.beta_seq.assign(n, ScalarTraits<S>::zero());
  p.gamma_seq.assign(n, ScalarTraits<S>::one());
  p.alpha = root2;
  p.beta = root2;
  return p;
}

/// Rule that produces band entries for indices 0..max requested: a constant,
/// an explicit list, or an eventually periodic sequence (preamble `values`
/// then `period` repeating forever).
template <class S>
struct CoefficientSource {
  enum class Kind { Constant, ExplicitList, EventuallyPeriodic };

  Kind kind = Kind::Constant;
  std::vector<S> values;
  std::vector<S> period;

  static CoefficientSource constant(S value) {
    return {Kind::Constant, {std::move(value)}, {}};
  }
  static CoefficientSource explicit_list(std::vector<S> values) {
    return {Kind::ExplicitList, std::move(values), {}};
  }
  static CoefficientSource eventually_periodic(std::vector<S> preamble,
                                               std::vector<S> period) {
    return {Kind::EventuallyPeriodic, std::move(preamble), std::move(period)};
  }

  S at(std::size_t i) const {
    switch (kind) {
      case Kind::Constant:
        return values.at(0);
      case Kind::ExplicitList:
        if (i >= values.size()) {
          throw SequenceExhausted("explicit list of length " +
                                  std::to_string(values.size()) +
                                  " has no entry at index " + std::to_string(i));
        }
        return values[i];
      case Kind::EventuallyPeriodic:
        if (i < values.size()) return values[i];
        return period.at((i - values.size()) % period.size());
    }
    throw InternalError("unreachable coefficient source kind");
  }

  std::vector<S> take(std::size_t count) const {
    std::vector<S> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(at(i));
    return out;
  }
};

}  // namespace jpencil
