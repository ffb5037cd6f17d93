#pragma once

#include <optional>
#include <string>

#include "relog/logbase.hpp"

namespace relog {

/// Evaluation points for zero-tolerant log1p interpretation corrections.
struct ZeroContext {
    double p_x = 0.0;                // proportional change of the X base
    double x0 = 0.0;                 // evaluation point X_0 > 0
    std::optional<double> p_y;       // proportional change of the Y base
    std::optional<double> y0;        // evaluation point Y_0 > 0
};

struct ElasticityReading {
    double prop_change_x = 0.0;      // 1 + p_X + p_X/X_0
    double prop_change_y = 0.0;      // (1+p_Y)^beta + ((1+p_Y)^beta - 1)/Y_0
    double se_prop_change_y = 0.0;   // delta-method standard error
    std::string note;                // large-sample caveat
};

extern const char* const kDeltaMethodNote;

// Understatement from reading one unit of ln(1+X)/ln(1+p) as a (1+p)
// proportional change in X: p/x.
double rescaled_zero_error(double p, double x);

// Understatement from reading a linear change p in ln(1+X) as an e^p
// proportional change in X: (e^p - 1)/x.
double traditional_zero_error(double p, double x);

// Total error when the traditional reading also applies the 1+p
// approximation: e^p - (1+p) + (e^p - 1)/x.
double combined_traditional_error(double p, double x);

// 1 + p_x + p_x/x0
double exact_prop_change_x(double p_x, double x0);

// f(beta) = (1+p_y)^beta * (1 + 1/y0) - 1/y0; returns |f'(beta)| * se_beta.
double delta_method_se(double beta, double se_beta, double p_y, double y0);

ElasticityReading elasticity_recovery(double beta, double se_beta,
                                      const ZeroContext& ctx);

}  // namespace relog
