#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "relog/logbase.hpp"

namespace relog {

/// A linear change in a log-transformed variable together with its exact
/// and approximate proportional-change readings.
struct Interpretation {
    double linear_change = 0.0;  // in log units
    double base_p = 0.0;         // p of the base in effect
    double exact_prop = 0.0;     // b^units - 1
    double approx_prop = 0.0;    // the claimed proportional change
    double error = 0.0;          // approx_prop - exact_prop
};

struct ErrorCurve {
    std::string method_label;
    std::vector<std::pair<double, double>> grid;  // (p, error), p strictly increasing
};

// Exact proportional change implied by a linear change of `units` log units:
// (1+p)^units - 1.
double exact_percent_change(const LogBase& b, double units);

// Error of reading a linear change p in ln(X) as a p*100% change:
// (1+p) - e^p. Always <= 0.
double traditional_error(double p);

// Error of reading p/p_b units of log_{1+p_b}(X) as a p*100% change:
// (1+p) - (1+p_b)^(p/p_b). Zero at p = p_b.
double rescaled_error(const LogBase& b, double p);

// Traditional-style approximation error under an arbitrary base:
// (1+p) - base^p.
double generic_base_error(double base, double p);

struct ErrorMethod {
    std::string label;
    std::function<double(double)> error_at;
};

ErrorMethod traditional_method();
ErrorMethod rescaled_method(const LogBase& b);
ErrorMethod generic_method(double base);

ErrorCurve error_curve(const ErrorMethod& method, double p_min, double p_max,
                       double step);

// Smallest p > 0 in (0, p_b) where the traditional and rescaled error
// magnitudes coincide. Bracketing scan + bisection to 1e-9.
double crossover(const LogBase& b);

struct BaseScanResult {
    double base = 0.0;
    double max_abs_error = 0.0;
    double argmax_p = 0.0;
};

// Maximum of |generic_base_error| over [0, p_max] per base; grid scan
// refined by golden-section search to 1e-6 in p.
std::vector<BaseScanResult> base_quality_scan(const std::vector<double>& bases,
                                              double p_max,
                                              double grid_step = 1e-3);

}  // namespace relog
