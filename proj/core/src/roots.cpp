#include "jpencil/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "jpencil/errors.hpp"

namespace jpencil {

namespace {

using cplx = std::complex<double>;

// p(z) and p'(z) in one Horner pass over ascending coefficients.
std::pair<cplx, cplx> eval_with_derivative(const std::vector<cplx>& c, cplx z) {
  cplx p = c.back();
  cplx dp = 0.0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

// Cauchy-style radius for initial guesses: 1 + max |c_k / c_d|.
double initial_radius(const std::vector<cplx>& c) {
  const double lead = std::abs(c.back());
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k]));
  return 1.0 + m / lead;
}

}  // namespace

RootSet find_roots(const Polynomial<double>& poly, const RootFindOptions& opts) {
  if (poly.is_zero() || poly.degree() < 1) {
    throw DomainError("root finding needs a nonzero polynomial of degree >= 1");
  }
  if (poly.degree() > opts.max_degree && !opts.force) {
    throw DegreeLimit("degree " + std::to_string(poly.degree()) +
                      " exceeds the default limit " + std::to_string(opts.max_degree) +
                      " (float coefficients degrade; pass force to override)");
  }

  RootSet result;
  result.n = static_cast<int>(poly.degree());

  // Deflate exact zero roots at the origin.
  std::vector<double> coeffs(poly.coeffs().begin(), poly.coeffs().end());
  std::size_t zero_roots = 0;
  while (zero_roots < coeffs.size() - 1 && coeffs[zero_roots] == 0.0) ++zero_roots;
  for (std::size_t k = 0; k < zero_roots; ++k) result.roots.push_back(0.0);

  const std::size_t d = coeffs.size() - 1 - zero_roots;
  if (d > 0) {
    std::vector<cplx> c(coeffs.begin() + static_cast<long>(zero_roots), coeffs.end());
    const cplx lead = c.back();
    for (auto& x : c) x /= lead;  // monic

    // Perturbed-circle initial guesses, deterministic per seed.
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    const double r = initial_radius(c);
    std::vector<cplx> z(d);
    for (std::size_t j = 0; j < d; ++j) {
      const double angle = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.35) /
                               static_cast<double>(d) +
                           jitter(rng);
      const double rad = r * (1.0 + jitter(rng));
      z[j] = std::polar(rad, angle);
    }

    bool converged = false;
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
      double max_step = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        const auto [p, dp] = eval_with_derivative(c, z[j]);
        if (p == cplx(0.0)) continue;
        cplx repulsion = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
          if (k != j) repulsion += 1.0 / (z[j] - z[k]);
        }
        const cplx newton = p / dp;
        const cplx denom = 1.0 - newton * repulsion;
        cplx step = (denom == cplx(0.0)) ? newton : newton / denom;
        z[j] -= step;
        max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[j])));
      }
      if (max_step < opts.step_tolerance) {
        converged = true;
        break;
      }
    }
    result.converged = converged;
    result.iterations = iter;

    for (int s = 0; s < opts.newton_polish_steps; ++s) {
      for (auto& root : z) {
        const auto [p, dp] = eval_with_derivative(c, root);
        if (dp != cplx(0.0)) {
          const cplx step = p / dp;
          // Polishing must not kick a root out of a multiple cluster.
          if (std::abs(step) < 1e-3 * (1.0 + std::abs(root))) root -= step;
        }
      }
    }

    result.roots.insert(result.roots.end(), z.begin(), z.end());
  }

  std::sort(result.roots.begin(), result.roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  const Polynomial<double>& p = poly;
  for (const cplx& root : result.roots) {
    result.residuals.push_back(std::abs(p.eval(root)));
    result.max_imag_abs = std::max(result.max_imag_abs, std::abs(root.imag()));
  }
  return result;
}

std::vector<RealnessRow> realness_report(const PolynomialSystem<double>& sys,
                                         int n_max, double imag_tol_scale,
                                         const RootFindOptions& opts) {
  std::vector<RealnessRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const RootSet roots = find_roots(sys.p(static_cast<std::size_t>(n)), opts);
    RealnessRow row;
    row.n = n;
    row.converged = roots.converged;
    row.max_imag_abs = roots.max_imag_abs;
    row.all_real = true;
    row.imag_tolerance = 0.0;
    for (const auto& r : roots.roots) {
      const double tol = imag_tol_scale * (1.0 + std::abs(r));
      row.imag_tolerance = std::max(row.imag_tolerance, tol);
      if (std::abs(r.imag()) > tol) row.all_real = false;
    }
    row.min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.roots.size(); ++j) {
        row.min_gap = std::min(row.min_gap, std::abs(roots.roots[i] - roots.roots[j]));
      }
    }
    if (!std::isfinite(row.min_gap)) row.min_gap = 0.0;
    for (double res : roots.residuals) row.max_residual = std::max(row.max_residual, res);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace jpencil
