#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "jpencil/polynomial.hpp"
#include "jpencil/recurrence.hpp"

namespace jpencil {

struct RootFindOptions {
  int max_iterations = 400;
  double step_tolerance = 1e-14;  // relative Aberth step size for convergence
  int newton_polish_steps = 3;
  std::uint64_t seed = 1;
  /// Degrees above this are refused unless `force` (float coefficient growth
  /// makes higher degrees unreliable for the builtin pencils).
  int max_degree = 60;
  bool force = false;
};

/// All zeros (with multiplicity) of a float polynomial.
struct RootSet {
  int n = 0;  // degree of the input
  std::vector<std::complex<double>> roots;
  std::vector<double> residuals;  // |p(root)| per root
  double max_imag_abs = 0.0;
  bool converged = true;
  int iterations = 0;
};

/// Simultaneous-iteration root finding: initial guesses on a perturbed
/// circle (deterministic for a fixed seed), Aberth corrections until the
/// steps stall, then a few Newton polishing passes. Zero roots at the origin
/// are deflated exactly first. Non-convergence is reported in the result,
/// never thrown.
RootSet find_roots(const Polynomial<double>& poly, const RootFindOptions& opts = {});

struct RealnessRow {
  int n = 0;
  double max_imag_abs = 0.0;
  bool all_real = false;
  double min_gap = 0.0;       // smallest pairwise root distance (clustering hint)
  double max_residual = 0.0;
  double imag_tolerance = 0.0;
  bool converged = true;
};

/// Per-degree zero statistics for p_1..p_Nmax of a float-mode system.
/// A root r counts as real when |Im r| <= imag_tol_scale * (1 + |r|).
/// Exploration output: nothing here asserts the realness conjecture.
std::vector<RealnessRow> realness_report(const PolynomialSystem<double>& sys,
                                         int n_max, double imag_tol_scale = 1e-8,
                                         const RootFindOptions& opts = {});

}  // namespace jpencil
