#include "jpencil/emit.hpp"

#include <nlohmann/json.hpp>

namespace jpencil {

namespace {
using nlohmann::json;
}

void write_csv(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ',';
      os << row[k];
    }
    os << '\n';
  }
}

std::string coefficients_json(const std::string& scalar_mode,
                              const std::vector<std::vector<std::string>>& rows) {
  json out;
  out["scalar_mode"] = scalar_mode;
  out["n_max"] = rows.empty() ? -1 : static_cast<long>(rows.size()) - 1;
  json polys = json::array();
  for (std::size_t n = 0; n < rows.size(); ++n) {
    polys.push_back({{"n", n}, {"coefficients", rows[n]}});
  }
  out["polynomials"] = std::move(polys);
  return out.dump(2);
}

std::vector<std::vector<std::string>> zeros_rows(const std::vector<RootSet>& sets) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"n", "re", "im", "residual"});
  for (const auto& set : sets) {
    for (std::size_t k = 0; k < set.roots.size(); ++k) {
      rows.push_back({std::to_string(set.n), scalar_str(set.roots[k].real()),
                      scalar_str(set.roots[k].imag()), scalar_str(set.residuals[k])});
    }
  }
  return rows;
}

std::string realness_json(const std::vector<RealnessRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"max_imag_abs", r.max_imag_abs},
                   {"all_real", r.all_real},
                   {"min_gap", r.min_gap},
                   {"max_residual", r.max_residual},
                   {"imag_tolerance", r.imag_tolerance},
                   {"converged", r.converged}});
  }
  return out.dump(2);
}

std::string validation_json(const ValidationReport& report) {
  json out;
  out["ok"] = report.ok();
  json violations = json::array();
  for (const auto& v : report.violations) {
    json item{{"field", v.field}, {"message", v.message}};
    if (v.index) item["index"] = *v.index;
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  return out.dump(2);
}

namespace {

json check_to_json(const CheckReport& check) {
  return {{"name", check.name},
          {"passed", check.passed},
          {"exact_mode", check.exact_mode},
          {"max_deviation", check.max_deviation},
          {"tolerance", check.tolerance},
          {"tolerance_rule", check.tolerance_rule},
          {"checks_run", check.checks_run},
          {"failures", check.failures}};
}

}  // namespace

std::string check_reports_json(const std::vector<CheckReport>& checks) {
  bool all = true;
  json arr = json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    arr.push_back(check_to_json(c));
  }
  return json{{"passed", all}, {"checks", std::move(arr)}}.dump(2);
}

std::string crosscheck_json(const CrosscheckReport& report) {
  return json{{"name", "theta1_crosscheck"},
              {"passed", report.passed},
              {"n_max", report.n_max},
              {"grid_points", report.grid_points},
              {"max_dev_closed_form", report.max_dev_closed_form},
              {"max_dev_power_form", report.max_dev_power_form},
              {"max_deviation", report.max_deviation},
              {"tolerance", report.tolerance}}
      .dump(2);
}

std::string error_json(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}}.dump();
}

}  // namespace jpencil
