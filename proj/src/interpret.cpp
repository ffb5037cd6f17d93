#include "relog/interpret.hpp"

#include <cmath>
#include <sstream>

namespace relog {

double exact_percent_change(const LogBase& b, double units) {
    if (!std::isfinite(units)) {
        throw std::invalid_argument("exact_percent_change: units must be finite");
    }
    return std::expm1(units * b.log_of_base());
}

namespace {

// shared by the traditional and generic-base error functions so that
// generic_base_error(e, p) and traditional_error(p) are bit-identical
double approx_error(double log_base, double p) {
    return (1.0 + p) - std::exp(p * log_base);
}

}  // namespace

double traditional_error(double p) {
    if (!std::isfinite(p)) {
        throw std::invalid_argument("traditional_error: p must be finite");
    }
    return approx_error(1.0, p);
}

double rescaled_error(const LogBase& b, double p) {
    if (!std::isfinite(p)) {
        throw std::invalid_argument("rescaled_error: p must be finite");
    }
    // reading p/p_b log units as a p*100% change
    double units = p / b.p();
    return (1.0 + p) - std::exp(units * b.log_of_base());
}

double generic_base_error(double base, double p) {
    if (!std::isfinite(base) || base <= 0.0 || base == 1.0) {
        std::ostringstream ss;
        ss << "generic_base_error: invalid base " << base;
        throw std::invalid_argument(ss.str());
    }
    if (!std::isfinite(p)) {
        throw std::invalid_argument("generic_base_error: p must be finite");
    }
    return approx_error(std::log(base), p);
}

ErrorMethod traditional_method() {
    return {"traditional", [](double p) { return traditional_error(p); }};
}

ErrorMethod rescaled_method(const LogBase& b) {
    std::ostringstream label;
    label << "base_" << b.base();
    return {label.str(), [b](double p) { return rescaled_error(b, p); }};
}

ErrorMethod generic_method(double base) {
    generic_base_error(base, 0.0);  // validate
    std::ostringstream label;
    label << "base_" << base;
    return {label.str(), [base](double p) { return generic_base_error(base, p); }};
}

ErrorCurve error_curve(const ErrorMethod& method, double p_min, double p_max,
                       double step) {
    if (!(p_min < p_max) || !(step > 0.0)) {
        throw std::invalid_argument("error_curve: need p_min < p_max and step > 0");
    }
    ErrorCurve curve;
    curve.method_label = method.label;
    long n = std::lround((p_max - p_min) / step);
    if (n < 1) {
        throw std::invalid_argument("error_curve: degenerate grid");
    }
    curve.grid.reserve(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        double p = p_min + static_cast<double>(i) * step;
        if (p > p_max) p = p_max;
        double e = method.error_at(p);
        if (!std::isfinite(e)) {
            throw std::runtime_error("error_curve: non-finite error value");
        }
        curve.grid.emplace_back(p, e);
    }
    return curve;
}

double crossover(const LogBase& b) {
    double pb = b.p();
    if (pb <= 0.0) {
        throw std::invalid_argument("crossover: base must have p > 0");
    }
    auto diff = [&](double p) {
        return std::fabs(traditional_error(p)) - std::fabs(rescaled_error(b, p));
    };
    // Near 0 the traditional error is O(p^2) while the rescaled error is
    // O(p), so diff < 0 there; scan upward for the first sign change.
    const int steps = 2000;
    double lo = pb / steps;
    double hi = 0.0;
    bool bracketed = false;
    for (int i = 2; i <= steps; ++i) {
        hi = pb * static_cast<double>(i) / steps;
        if (diff(lo) < 0.0 && diff(hi) >= 0.0) {
            bracketed = true;
            break;
        }
        lo = hi;
    }
    if (!bracketed) {
        throw std::runtime_error("crossover: failed to bracket a sign change in (0, p_b)");
    }
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        if (diff(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

// Golden-section maximization of f on [a, b] to tolerance tol in x.
double golden_max(const std::function<double(double)>& f, double a, double b,
                  double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<BaseScanResult> base_quality_scan(const std::vector<double>& bases,
                                              double p_max, double grid_step) {
    if (!(p_max > 0.0) || !(grid_step > 0.0)) {
        throw std::invalid_argument("base_quality_scan: need p_max > 0 and grid_step > 0");
    }
    std::vector<BaseScanResult> out;
    out.reserve(bases.size());
    for (double base : bases) {
        auto abs_err = [base](double p) {
            return std::fabs(generic_base_error(base, p));
        };
        double best_p = 0.0;
        double best = 0.0;
        long n = std::lround(p_max / grid_step);
        for (long i = 0; i <= n; ++i) {
            double p = std::min(static_cast<double>(i) * grid_step, p_max);
            double e = abs_err(p);
            if (e > best) {
                best = e;
                best_p = p;
            }
        }
        double lo = std::max(0.0, best_p - grid_step);
        double hi = std::min(p_max, best_p + grid_step);
        double refined_p = golden_max(abs_err, lo, hi, 1e-6);
        double refined = abs_err(refined_p);
        if (refined < best) {
            refined = best;
            refined_p = best_p;
        }
        out.push_back({base, refined, refined_p});
    }
    return out;
}

}  // namespace relog
