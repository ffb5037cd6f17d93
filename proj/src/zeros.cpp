#include "relog/zeros.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace relog {

const char* const kDeltaMethodNote =
    "delta-method standard error is valid in large samples; no adjustment "
    "for zero-censoring of the variables";

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        std::ostringstream ss;
        ss << name << " must be positive, got " << v;
        throw std::invalid_argument(ss.str());
    }
}

}  // namespace

double rescaled_zero_error(double p, double x) {
    require_positive(p, "p");
    require_positive(x, "x");
    return p / x;
}

double traditional_zero_error(double p, double x) {
    require_positive(p, "p");
    require_positive(x, "x");
    return std::expm1(p) / x;
}

double combined_traditional_error(double p, double x) {
    require_positive(p, "p");
    require_positive(x, "x");
    return std::exp(p) - (1.0 + p) + std::expm1(p) / x;
}

double exact_prop_change_x(double p_x, double x0) {
    require_positive(p_x, "p_x");
    require_positive(x0, "x0");
    return 1.0 + p_x + p_x / x0;
}

double delta_method_se(double beta, double se_beta, double p_y, double y0) {
    require_positive(p_y, "p_y");
    require_positive(y0, "y0");
    if (se_beta < 0.0) {
        throw std::invalid_argument("delta_method_se: se_beta must be >= 0");
    }
    double log_base = std::log1p(p_y);
    double deriv = std::exp(beta * log_base) * log_base * (1.0 + 1.0 / y0);
    return std::fabs(deriv) * se_beta;
}

ElasticityReading elasticity_recovery(double beta, double se_beta,
                                      const ZeroContext& ctx) {
    if (!ctx.p_y || !ctx.y0) {
        throw std::invalid_argument("elasticity_recovery: context requires p_y and y0");
    }
    double p_y = *ctx.p_y;
    double y0 = *ctx.y0;
    require_positive(p_y, "p_y");
    require_positive(y0, "y0");

    ElasticityReading out;
    out.prop_change_x = exact_prop_change_x(ctx.p_x, ctx.x0);
    double growth = std::exp(beta * std::log1p(p_y));  // (1+p_y)^beta
    out.prop_change_y = growth + (growth - 1.0) / y0;
    out.se_prop_change_y = delta_method_se(beta, se_beta, p_y, y0);
    out.note = kDeltaMethodNote;
    return out;
}

}  // namespace relog
