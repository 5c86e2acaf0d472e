#include "jpencil/theta1.hpp"

#include <cmath>
#include <numbers>

#include "jpencil/pencil.hpp"
#include "jpencil/recurrence.hpp"

namespace jpencil {

namespace {

constexpr double kGuard = 1e-8;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

std::complex<double> cpow_int(std::complex<double> base, int n) {
  std::complex<double> acc = 1.0;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

// sin(3 pi n / 4) is periodic with period 8 and takes values in
// {0, +-sqrt(2)/2, +-1}; the table avoids large-argument trig error.
double sin_three_quarter_pi(int n) {
  static const double h = std::numbers::sqrt2 / 2.0;
  static const double table[8] = {0.0, h, -1.0, h, 0.0, -h, 1.0, -h};
  return table[n % 8];
}

}  // namespace

double chebyshev_trig(ChebKind kind, int n, double t) {
  if (std::abs(t) > 1.0) {
    throw DomainError("trigonometric Chebyshev evaluation needs |t| <= 1");
  }
  const double theta = std::acos(t);
  if (kind == ChebKind::First) return std::cos(n * theta);
  if (n < 0) return 0.0;
  const double s = std::sin(theta);
  if (s == 0.0) {
    // t = +-1: U_n(1) = n+1, U_n(-1) = (-1)^n (n+1).
    const double v = static_cast<double>(n + 1);
    return t > 0 ? v : (n % 2 == 0 ? v : -v);
  }
  return std::sin((n + 1) * theta) / s;
}

double theta1_closed_form(int n, double t) {
  if (n < 0) throw DomainError("negative degree");
  if (t <= -1.0 || t >= 1.0) {
    throw DomainError("t outside (-1, 1)");
  }
  if (std::abs(t + kInvSqrt2) <= kGuard) {
    throw DomainError("t inside the guard band around -1/sqrt(2)");
  }
  const double tn = chebyshev_value(ChebKind::First, n, t);
  const double un1 = n >= 1 ? chebyshev_value(ChebKind::Second, n - 1, t) : 0.0;
  const double un1_at_sing =
      n >= 1 ? chebyshev_value(ChebKind::Second, n - 1, -kInvSqrt2) : 0.0;
  return tn + t * un1 - 0.5 * (un1 - un1_at_sing) / (t + kInvSqrt2);
}

std::complex<double> theta1_power_form(int n, std::complex<double> lambda,
                                       int sqrt_sign) {
  if (n < 0) throw DomainError("negative degree");
  const double sqrt2 = std::numbers::sqrt2;
  for (const double excluded : {-2.0, -1.0 + sqrt2, -1.0 - sqrt2}) {
    if (std::abs(lambda - excluded) <= kGuard) {
      throw DomainError("lambda within guard distance of an excluded point");
    }
  }
  const std::complex<double> s =
      static_cast<double>(sqrt_sign) * std::sqrt(lambda * lambda + 2.0 * lambda - 1.0);
  const std::complex<double> plus = cpow_int(lambda + 1.0 + s, n);
  const std::complex<double> minus = cpow_int(lambda + 1.0 - s, n);
  const std::complex<double> ratio =
      (lambda * lambda + 3.0 * lambda + 1.0) / ((lambda + 2.0) * s);
  const double scale = std::exp2(-0.5 * n - 1.0);
  return sin_three_quarter_pi(n) / (lambda + 2.0) +
         scale * (plus + minus + ratio * (plus - minus));
}

CharacteristicRoots theta1_characteristic_roots(std::complex<double> lambda,
                                                int sqrt_sign) {
  const double h = std::numbers::sqrt2 / 2.0;
  const std::complex<double> s =
      static_cast<double>(sqrt_sign) * std::sqrt(lambda * lambda + 2.0 * lambda - 1.0);
  CharacteristicRoots r;
  r.lambda = lambda;
  r.sqrt_value = s;
  r.w[0] = h * std::complex<double>(-1.0, -1.0);
  r.w[1] = h * std::complex<double>(-1.0, +1.0);
  r.w[2] = h * (lambda + 1.0 + s);
  r.w[3] = h * (lambda + 1.0 - s);
  return r;
}

std::complex<double> theta1_quartic(std::complex<double> lambda, std::complex<double> w) {
  const double sqrt2 = std::numbers::sqrt2;
  const std::complex<double> w2 = w * w;
  return w2 * w2 - sqrt2 * lambda * w2 * w - 2.0 * lambda * w2 - sqrt2 * lambda * w + 1.0;
}

namespace {

// Gaussian elimination with partial pivoting on the 4x4 system; returns the
// determinant and the solution.
std::complex<double> solve4(std::array<std::array<std::complex<double>, 4>, 4> m,
                            std::array<std::complex<double>, 4> rhs,
                            std::array<std::complex<double>, 4>& out) {
  std::complex<double> det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(rhs[pivot], rhs[col]);
      det = -det;
    }
    det *= m[col][col];
    if (m[col][col] == 0.0) return 0.0;
    for (int r = col + 1; r < 4; ++r) {
      const std::complex<double> f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = 3; r >= 0; --r) {
    std::complex<double> acc = rhs[r];
    for (int c = r + 1; c < 4; ++c) acc -= m[r][c] * out[c];
    out[r] = acc / m[r][r];
  }
  return det;
}

}  // namespace

InitialConditionSystem theta1_initial_system(std::complex<double> lambda,
                                             int sqrt_sign) {
  const double sqrt2 = std::numbers::sqrt2;
  for (const double excluded : {-2.0, -1.0 + sqrt2, -1.0 - sqrt2}) {
    if (std::abs(lambda - excluded) <= kGuard) {
      throw DomainError("lambda within guard distance of an excluded point");
    }
  }
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> s =
      static_cast<double>(sqrt_sign) * std::sqrt(lambda * lambda + 2.0 * lambda - 1.0);

  InitialConditionSystem sys;
  sys.matrix = {{
      {-lambda + (lambda + 1.0) * i, -lambda - (lambda + 1.0) * i, -lambda + s,
       -lambda - s},
      {1.0 - i, 1.0 + i, -lambda - 1.0 + s, -lambda - 1.0 - s},
      {1.0, 1.0, 1.0, 1.0},
      {-1.0 - i, -1.0 + i, lambda + 1.0 + s, lambda + 1.0 - s},
  }};
  sys.rhs = {0.0, 0.0, 1.0, 2.0 * lambda + 2.0};

  std::array<std::complex<double>, 4> solved{};
  sys.det_elimination = solve4(sys.matrix, sys.rhs, solved);
  sys.det_formula = -8.0 * (lambda + 2.0) * (lambda + 2.0) * s * i;

  const std::complex<double> c12 = 1.0 / (2.0 * (lambda + 2.0) * i);
  const std::complex<double> tail =
      (lambda * lambda + 3.0 * lambda + 1.0) / (2.0 * (lambda + 2.0) * s);
  sys.coeffs = {-c12, c12, 0.5 + tail, 0.5 - tail};

  sys.residual = 0.0;
  for (int r = 0; r < 4; ++r) {
    std::complex<double> acc = -sys.rhs[r];
    for (int c = 0; c < 4; ++c) acc += sys.matrix[r][c] * sys.coeffs[c];
    sys.residual = std::max(sys.residual, std::abs(acc));
  }
  return sys;
}

CrosscheckReport theta1_crosscheck(int n_max, std::span<const double> grid,
                                   double tolerance) {
  const double sqrt2 = std::numbers::sqrt2;
  const auto sys = generate(theta1_pencil<double>(std::max(n_max, 1)), std::max(n_max, 1));

  CrosscheckReport report;
  report.n_max = n_max;
  report.grid_points = grid.size();
  report.tolerance = tolerance;
  for (const double t : grid) {
    const double lambda = sqrt2 * t - 1.0;
    for (int n = 0; n <= n_max; ++n) {
      const double recur = sys.p(static_cast<std::size_t>(n)).eval(lambda);
      const double closed = theta1_closed_form(n, t);
      const std::complex<double> power = theta1_power_form(n, lambda);
      report.max_dev_closed_form =
          std::max(report.max_dev_closed_form, std::abs(recur - closed));
      report.max_dev_power_form =
          std::max(report.max_dev_power_form, std::abs(power - recur));
    }
  }
  report.max_deviation = std::max(report.max_dev_closed_form, report.max_dev_power_form);
  report.passed = report.max_deviation <= tolerance;
  return report;
}

std::vector<double> theta1_grid(std::size_t count) {
  // Margins keep points strictly inside (-1, 1) and outside the singular
  // guard band.
  const double lo = -1.0 + 1e-3;
  const double hi = 1.0 - 1e-3;
  const std::size_t candidates = count + 8;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t k = 0; k < candidates && grid.size() < count; ++k) {
    const double t = lo + (hi - lo) * (static_cast<double>(k) + 0.5) /
                              static_cast<double>(candidates);
    if (std::abs(t + kInvSqrt2) <= 1e-6) continue;
    grid.push_back(t);
  }
  return grid;
}

}  // namespace jpencil
