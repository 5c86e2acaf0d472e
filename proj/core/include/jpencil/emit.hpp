#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "jpencil/operator.hpp"
#include "jpencil/recurrence.hpp"
#include "jpencil/reports.hpp"
#include "jpencil/roots.hpp"
#include "jpencil/theta1.hpp"

namespace jpencil {

/// Plain CSV, '.' decimal separator, no quoting (serialized scalars never
/// contain commas).
void write_csv(std::ostream& os, const std::vector<std::vector<std::string>>& rows);

/// One row per polynomial, columns = coefficients in ascending degree order.
template <class S>
std::vector<std::vector<std::string>> coefficient_rows(const PolynomialSystem<S>& sys) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(sys.polys.size());
  for (const auto& poly : sys.polys) {
    std::vector<std::string> row;
    for (long k = 0; k <= std::max<long>(poly.degree(), 0); ++k) {
      row.push_back(scalar_str(poly.coeff(static_cast<std::size_t>(k))));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
std::vector<std::vector<std::string>> matrix_rows(const std::vector<std::vector<S>>& m) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    std::vector<std::string> row;
    row.reserve(r.size());
    for (const auto& x : r) row.push_back(scalar_str(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Dense (N+1)x(N+1) view of the truncation: entry (i, j) = coordinate i of
/// A e_j for i, j = 0..N.
template <class S>
std::vector<std::vector<std::string>> operator_rows(const OperatorTruncation<S>& op) {
  const std::size_t n = static_cast<std::size_t>(op.max_column()) + 1;
  std::vector<std::vector<std::string>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      rows[i].push_back(scalar_str(op.column(j).coord(i)));
    }
  }
  return rows;
}

/// {"scalar_mode": ..., "n_max": ..., "polynomials": [{"n", "coefficients"}]}
std::string coefficients_json(const std::string& scalar_mode,
                              const std::vector<std::vector<std::string>>& rows);

/// zeros.csv rows: n, re, im, residual (one line per root, header included).
std::vector<std::vector<std::string>> zeros_rows(const std::vector<RootSet>& sets);

std::string realness_json(const std::vector<RealnessRow>& rows);

std::string validation_json(const ValidationReport& report);

std::string check_reports_json(const std::vector<CheckReport>& checks);

std::string crosscheck_json(const CrosscheckReport& report);

/// Machine-readable error envelope the CLI prints on stderr.
std::string error_json(const std::string& kind, const std::string& message);

}  // namespace jpencil
