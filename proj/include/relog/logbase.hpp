#pragma once

#include <cmath>
#include <stdexcept>

namespace relog {

/// A logarithm base expressed through the proportional change p it
/// represents: base = 1 + p, so one log unit is exactly a (1+p)
/// proportional change.
class LogBase {
public:
    static LogBase from_p(double p);
    static LogBase from_base(double base);
    static LogBase natural();  // base e, p = e - 1

    double p() const { return p_; }
    double base() const { return 1.0 + p_; }
    double log_of_base() const { return log_base_; }  // ln(1+p)

    bool operator==(const LogBase& other) const { return p_ == other.p_; }

private:
    explicit LogBase(double p) : p_(p), log_base_(std::log1p(p)) {}

    double p_;
    double log_base_;
};

// log_{1+p}(x) = ln(x)/ln(1+p); rejects x <= 0
double transform(double x, const LogBase& b);

// (1+p)^u
double inverse_transform(double u, const LogBase& b);

// ln(1+x)/ln(1+p); rejects x < 0
double transform_log1p(double x, const LogBase& b);

// ln(x + sqrt(x^2+1)), negative inputs handled by reflection
double transform_asinh(double x);

}  // namespace relog
