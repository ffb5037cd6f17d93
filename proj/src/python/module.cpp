#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relog/audit.hpp"
#include "relog/formula.hpp"
#include "relog/interpret.hpp"
#include "relog/logbase.hpp"
#include "relog/regress.hpp"
#include "relog/report.hpp"
#include "relog/zeros.hpp"

namespace py = pybind11;
using namespace relog;

namespace {

Dataset dataset_from_dict(const std::map<std::string, std::vector<double>>& columns) {
    Dataset data;
    for (const auto& [name, values] : columns) {
        data.add_column(name, values);
    }
    return data;
}

py::dict fit_to_dict(const FitResult& fit) {
    py::dict out;
    out["terms"] = fit.term_names;
    std::vector<double> coef, se, t, p;
    for (long j = 0; j < fit.coefficients.size(); ++j) {
        coef.push_back(fit.coefficients(j));
        se.push_back(fit.standard_errors(j));
        t.push_back(fit.t_stats(j));
        p.push_back(fit.p_values(j));
    }
    out["coefficients"] = coef;
    out["standard_errors"] = se;
    out["t_stats"] = t;
    out["p_values"] = p;
    out["n"] = fit.n;
    out["residual_variance"] = fit.residual_variance;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "base-(1+p) logarithms for regression interpretation";

    m.def("transform",
          [](double x, double p) { return transform(x, LogBase::from_p(p)); },
          py::arg("x"), py::arg("p"), "log_{1+p}(x) = ln(x)/ln(1+p)");
    m.def("inverse_transform",
          [](double u, double p) { return inverse_transform(u, LogBase::from_p(p)); },
          py::arg("u"), py::arg("p"), "(1+p)^u");
    m.def("transform_log1p",
          [](double x, double p) { return transform_log1p(x, LogBase::from_p(p)); },
          py::arg("x"), py::arg("p"), "ln(1+x)/ln(1+p)");
    m.def("transform_asinh", &transform_asinh, py::arg("x"));

    m.def("exact_percent_change",
          [](double p, double units) {
              return exact_percent_change(LogBase::from_p(p), units);
          },
          py::arg("p"), py::arg("units") = 1.0, "(1+p)^units - 1");
    m.def("traditional_error", &traditional_error, py::arg("p"));
    m.def("rescaled_error",
          [](double base_p, double p) {
              return rescaled_error(LogBase::from_p(base_p), p);
          },
          py::arg("base_p"), py::arg("p"));
    m.def("generic_base_error", &generic_base_error, py::arg("base"), py::arg("p"));
    m.def("crossover",
          [](double base_p) { return crossover(LogBase::from_p(base_p)); },
          py::arg("base_p"));
    m.def("base_quality_scan",
          [](const std::vector<double>& bases, double p_max, double grid_step) {
              py::list out;
              for (const auto& r : base_quality_scan(bases, p_max, grid_step)) {
                  py::dict d;
                  d["base"] = r.base;
                  d["max_abs_error"] = r.max_abs_error;
                  d["argmax_p"] = r.argmax_p;
                  out.append(d);
              }
              return out;
          },
          py::arg("bases"), py::arg("p_max"), py::arg("grid_step") = 1e-3);

    m.def("rescaled_zero_error", &rescaled_zero_error, py::arg("p"), py::arg("x"));
    m.def("traditional_zero_error", &traditional_zero_error, py::arg("p"), py::arg("x"));
    m.def("combined_traditional_error", &combined_traditional_error,
          py::arg("p"), py::arg("x"));
    m.def("exact_prop_change_x", &exact_prop_change_x, py::arg("p_x"), py::arg("x0"));
    m.def("delta_method_se", &delta_method_se, py::arg("beta"), py::arg("se_beta"),
          py::arg("p_y"), py::arg("y0"));
    m.def("elasticity_recovery",
          [](double beta, double se_beta, double p_x, double x0, double p_y,
             double y0) {
              ZeroContext ctx{p_x, x0, p_y, y0};
              ElasticityReading r = elasticity_recovery(beta, se_beta, ctx);
              py::dict out;
              out["prop_change_x"] = r.prop_change_x;
              out["prop_change_y"] = r.prop_change_y;
              out["se_prop_change_y"] = r.se_prop_change_y;
              out["note"] = r.note;
              return out;
          },
          py::arg("beta"), py::arg("se_beta"), py::arg("p_x"), py::arg("x0"),
          py::arg("p_y"), py::arg("y0"));

    m.def("rescale_coefficient",
          [](double beta, double from_p, double to_p) {
              return rescale_coefficient(beta, LogBase::from_p(from_p),
                                         LogBase::from_p(to_p));
          },
          py::arg("beta"), py::arg("from_p"), py::arg("to_p"));
    m.def("rescale_coefficient_from_natural",
          [](double beta, double to_p) {
              return rescale_coefficient(beta, LogBase::natural(),
                                         LogBase::from_p(to_p));
          },
          py::arg("beta"), py::arg("to_p"));

    m.def("fit",
          [](const std::map<std::string, std::vector<double>>& columns,
             const std::string& model) {
              return fit_to_dict(fit_model(dataset_from_dict(columns),
                                           parse_model(model)));
          },
          py::arg("columns"), py::arg("model"),
          "OLS over transformed columns, e.g. fit(cols, 'y ~ log(x, p=0.1)')");

    m.def("simulate",
          [](std::uint64_t seed, long n, const std::string& dgp, double beta0,
             double beta1, double noise_sd, double base_p) {
              SimParams params;
              params.beta0 = beta0;
              params.beta1 = beta1;
              params.noise_sd = noise_sd;
              params.base_p = base_p;
              Dataset d = simulate_dataset(seed, n, parse_dgp(dgp), params);
              py::dict out;
              for (const auto& name : d.names()) out[name.c_str()] = d.column(name);
              return out;
          },
          py::arg("seed"), py::arg("n"), py::arg("dgp") = "linear-log",
          py::arg("beta0") = 1.0, py::arg("beta1") = 0.2,
          py::arg("noise_sd") = 0.1, py::arg("base_p") = 0.1);

    m.def("error_curve_csv",
          [](double p_max, double step) {
              std::vector<ErrorCurve> curves{
                  error_curve(traditional_method(), 0.0, p_max, step),
                  error_curve(rescaled_method(LogBase::from_p(0.1)), 0.0, p_max, step),
                  error_curve(rescaled_method(LogBase::from_p(0.4)), 0.0, p_max, step),
              };
              return render_error_csv(curves);
          },
          py::arg("p_max") = 0.5, py::arg("step") = 0.005);

    m.def("audit",
          [](const std::string& scenario) {
              std::vector<AuditResult> results;
              if (scenario.empty()) {
                  for (const auto& s : builtin_scenarios()) results.push_back(run_audit(s));
              } else {
                  results.push_back(run_audit(scenario));
              }
              return render_audit(results);
          },
          py::arg("scenario") = "");
}
