#include "relog/logbase.hpp"

#include <sstream>

namespace relog {

LogBase LogBase::from_p(double p) {
    if (!std::isfinite(p)) {
        throw std::invalid_argument("log base: p must be finite");
    }
    if (p <= -1.0) {
        std::ostringstream ss;
        ss << "log base: p = " << p << " gives a nonpositive base 1+p";
        throw std::invalid_argument(ss.str());
    }
    if (p == 0.0) {
        throw std::invalid_argument(
            "log base: p = 0 gives base 1, for which the logarithm is undefined");
    }
    return LogBase(p);
}

LogBase LogBase::from_base(double base) {
    if (!std::isfinite(base) || base <= 0.0) {
        std::ostringstream ss;
        ss << "log base: base = " << base << " is not positive";
        throw std::invalid_argument(ss.str());
    }
    if (base == 1.0) {
        throw std::invalid_argument("log base: base 1 is undefined");
    }
    return LogBase(base - 1.0);
}

LogBase LogBase::natural() {
    return LogBase(std::exp(1.0) - 1.0);
}

double transform(double x, const LogBase& b) {
    if (!(x > 0.0)) {
        std::ostringstream ss;
        ss << "log transform requires x > 0, got x = " << x
           << " (use the log1p transform for zero-valued data)";
        throw std::invalid_argument(ss.str());
    }
    return std::log(x) / b.log_of_base();
}

double inverse_transform(double u, const LogBase& b) {
    if (!std::isfinite(u)) {
        throw std::invalid_argument("inverse log transform requires finite input");
    }
    double r = std::exp(u * b.log_of_base());
    if (!std::isfinite(r)) {
        throw std::range_error("inverse log transform overflowed");
    }
    return r;
}

double transform_log1p(double x, const LogBase& b) {
    if (x < 0.0) {
        std::ostringstream ss;
        ss << "log1p transform requires x >= 0, got x = " << x;
        throw std::invalid_argument(ss.str());
    }
    return std::log1p(x) / b.log_of_base();
}

double transform_asinh(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("asinh transform requires finite input");
    }
    if (x < 0.0) return -transform_asinh(-x);
    return std::log(x + std::sqrt(x * x + 1.0));
}

}  // namespace relog
