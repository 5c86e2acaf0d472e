#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "jpencil/errors.hpp"
#include "jpencil/scalar.hpp"

namespace jpencil {

enum class ChebKind { First, Second };

/// Chebyshev polynomial value by the three-term recurrence
/// X_{n+1} = 2 t X_n - X_{n-1}; valid for any t and exact scalar modes.
/// Second kind uses U_{-1} = 0.
template <class S>
S chebyshev_value(ChebKind kind, int n, const S& t) {
  const S one = ScalarTraits<S>::one();
  const S two_t = ScalarTraits<S>::from_int(2) * t;
  if (kind == ChebKind::Second && n < 0) return ScalarTraits<S>::zero();
  if (n < 0) throw DomainError("chebyshev of negative degree");
  S prev = one;                                    // X_0
  S cur = (kind == ChebKind::First) ? t : two_t;   // X_1
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    S next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Trigonometric route T_n(t) = cos(n arccos t), U_n(t) sin = sin((n+1) ...);
/// requires |t| <= 1. Float-mode cross-check for the recurrence.
double chebyshev_trig(ChebKind kind, int n, double t);

/// Closed form for the basic example's polynomials, evaluated through the
/// substitution lambda = sqrt(2) t - 1:
///   p_n(sqrt(2) t - 1) = T_n(t) + t U_{n-1}(t)
///                        - (1/2) (U_{n-1}(t) - U_{n-1}(-1/sqrt(2))) / (t + 1/sqrt(2)).
/// Domain: t in (-1, -1/sqrt(2)) u (-1/sqrt(2), 1); a guard band of 1e-8
/// around the removable singularity at -1/sqrt(2) is excluded.
double theta1_closed_form(int n, double t);

/// Explicit representation of p_n(lambda) through powers of the
/// characteristic roots, valid for complex lambda away from
/// {-2, -1+sqrt(2), -1-sqrt(2)} (guard distance 1e-8). The square root of
/// lambda^2 + 2 lambda - 1 enters only evenly, so sqrt_sign (+1/-1 times the
/// principal value) does not change the result.
std::complex<double> theta1_power_form(int n, std::complex<double> lambda,
                                       int sqrt_sign = +1);

/// The four roots of the characteristic quartic
///   w^4 - sqrt(2) lambda w^3 - 2 lambda w^2 - sqrt(2) lambda w + 1 = 0,
/// which factors as (w^2 + sqrt(2) w + 1)(w^2 - sqrt(2)(lambda+1) w + 1):
///   w_{1,2} = (sqrt(2)/2)(-1 -+ i),
///   w_{3,4} = (sqrt(2)/2)(lambda + 1 +- sqrt(lambda^2 + 2 lambda - 1)).
struct CharacteristicRoots {
  std::complex<double> lambda;
  std::complex<double> sqrt_value;          // chosen value of sqrt(lambda^2+2lambda-1)
  std::array<std::complex<double>, 4> w;    // w_1, w_2, w_3, w_4
};

CharacteristicRoots theta1_characteristic_roots(std::complex<double> lambda,
                                                int sqrt_sign = +1);

/// Value of the characteristic quartic at w (residual oracle for the roots).
std::complex<double> theta1_quartic(std::complex<double> lambda, std::complex<double> w);

/// The 4x4 linear system pinning the root-power coefficients C_1..C_4 to the
/// initial conditions, built exactly as derived; its determinant has the
/// closed form -8 (lambda+2)^2 sqrt(lambda^2+2lambda-1) i, and the solution
///   C_{1,2} = -+ 1/(2(lambda+2) i),
///   C_{3,4} = 1/2 +- (lambda^2+3lambda+1)/(2(lambda+2) sqrt(...)).
/// Solvable iff lambda is outside {-2, -1+-sqrt(2)}.
struct InitialConditionSystem {
  std::array<std::array<std::complex<double>, 4>, 4> matrix;
  std::array<std::complex<double>, 4> rhs;
  std::complex<double> det_elimination;   // Gaussian elimination determinant
  std::complex<double> det_formula;       // closed form above
  std::array<std::complex<double>, 4> coeffs;  // closed-form C_1..C_4
  double residual;                        // max row residual of M*C - rhs
};

InitialConditionSystem theta1_initial_system(std::complex<double> lambda,
                                             int sqrt_sign = +1);

/// Three-way agreement report: recurrence-generated polynomials vs the
/// Chebyshev closed form vs the root-power representation, on a grid of t
/// values inside the closed form's domain.
struct CrosscheckReport {
  int n_max = 0;
  std::size_t grid_points = 0;
  double max_dev_closed_form = 0.0;  // recurrence vs closed form
  double max_dev_power_form = 0.0;   // recurrence vs power form
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

CrosscheckReport theta1_crosscheck(int n_max, std::span<const double> grid,
                                   double tolerance = 1e-9);

/// Uniform grid of `count` points covering the closed form's domain,
/// excluding the endpoints and the guard band around -1/sqrt(2).
std::vector<double> theta1_grid(std::size_t count);

}  // namespace jpencil
