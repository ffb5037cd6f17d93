#include "relog/regress.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "relog/tdist.hpp"

namespace relog {

TransformSpec TransformSpec::identity() { return {TransformKind::identity, std::nullopt}; }
TransformSpec TransformSpec::natural_log() { return {TransformKind::natural_log, std::nullopt}; }
TransformSpec TransformSpec::rescaled_log(const LogBase& b) { return {TransformKind::rescaled_log, b}; }
TransformSpec TransformSpec::rescaled_log1p(const LogBase& b) { return {TransformKind::rescaled_log1p, b}; }
TransformSpec TransformSpec::asinh() { return {TransformKind::asinh, std::nullopt}; }

double TransformSpec::apply(double x) const {
    switch (kind) {
        case TransformKind::identity:
            return x;
        case TransformKind::natural_log:
            if (!(x > 0.0)) throw std::invalid_argument("log of nonpositive value");
            return std::log(x);
        case TransformKind::rescaled_log:
            return transform(x, *base);
        case TransformKind::rescaled_log1p:
            return transform_log1p(x, *base);
        case TransformKind::asinh:
            return transform_asinh(x);
    }
    throw std::logic_error("unreachable transform kind");
}

std::string TransformSpec::describe() const {
    std::ostringstream ss;
    switch (kind) {
        case TransformKind::identity: return "identity";
        case TransformKind::natural_log: return "log";
        case TransformKind::rescaled_log:
            ss << "log_" << base->base();
            return ss.str();
        case TransformKind::rescaled_log1p:
            ss << "log1p_" << base->base();
            return ss.str();
        case TransformKind::asinh: return "asinh";
    }
    return "?";
}

void Dataset::add_column(const std::string& name, std::vector<double> values) {
    if (has_column(name)) {
        throw std::invalid_argument("duplicate column name: " + name);
    }
    if (!names_.empty() && values.size() != columns_.front().size()) {
        std::ostringstream ss;
        ss << "column " << name << " has length " << values.size()
           << ", expected " << columns_.front().size();
        throw std::invalid_argument(ss.str());
    }
    names_.push_back(name);
    columns_.push_back(std::move(values));
}

const std::vector<double>& Dataset::column(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return columns_[i];
    }
    throw std::invalid_argument("no such column: " + name);
}

bool Dataset::has_column(const std::string& name) const {
    for (const auto& n : names_) {
        if (n == name) return true;
    }
    return false;
}

size_t Dataset::n() const {
    return columns_.empty() ? 0 : columns_.front().size();
}

int FitResult::term_index(const std::string& name) const {
    for (size_t i = 0; i < term_names.size(); ++i) {
        if (term_names[i] == name) return static_cast<int>(i);
    }
    return -1;
}

namespace {

std::vector<double> transform_column(const Dataset& data, const ModelTerm& term) {
    const auto& raw = data.column(term.column);
    std::vector<double> out(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        try {
            out[i] = term.transform.apply(raw[i]);
        } catch (const std::invalid_argument& e) {
            std::ostringstream ss;
            ss << "column " << term.column << ", row " << i + 1 << ": " << e.what();
            throw std::invalid_argument(ss.str());
        }
    }
    return out;
}

}  // namespace

DesignData apply_transforms(const Dataset& data, const ModelSpec& spec) {
    long n = static_cast<long>(data.n());
    long k = static_cast<long>(spec.predictors.size()) + (spec.intercept ? 1 : 0);
    if (k == 0) {
        throw std::invalid_argument("model has no predictors");
    }

    DesignData dd;
    dd.design.resize(n, k);
    long col = 0;
    if (spec.intercept) {
        dd.design.col(0).setOnes();
        dd.term_names.push_back("(Intercept)");
        col = 1;
    }
    for (const auto& term : spec.predictors) {
        auto values = transform_column(data, term);
        for (long i = 0; i < n; ++i) dd.design(i, col) = values[static_cast<size_t>(i)];
        dd.term_names.push_back(term.column);
        ++col;
    }
    auto y = transform_column(data, spec.outcome);
    dd.response = Eigen::Map<Eigen::VectorXd>(y.data(), n);
    return dd;
}

FitResult fit_ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                  const std::vector<std::string>& term_names) {
    long n = design.rows();
    long k = design.cols();
    if (response.size() != n) {
        throw std::invalid_argument("fit_ols: design and response lengths differ");
    }
    if (n <= k) {
        std::ostringstream ss;
        ss << "fit_ols: insufficient data, n = " << n << " with " << k << " parameters";
        throw std::invalid_argument(ss.str());
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    long rank = qr.rank();
    if (rank < k) {
        // columns permuted past `rank` are linear combinations of the others
        auto perm = qr.colsPermutation().indices();
        std::ostringstream ss;
        ss << "fit_ols: design is rank deficient; dependent column(s):";
        for (long j = rank; j < k; ++j) {
            long orig = perm(j);
            ss << " " << (orig < static_cast<long>(term_names.size())
                              ? term_names[static_cast<size_t>(orig)]
                              : std::to_string(orig));
        }
        throw std::invalid_argument(ss.str());
    }

    FitResult fit;
    fit.term_names = term_names;
    fit.n = n;
    fit.coefficients = qr.solve(response);

    Eigen::VectorXd residuals = response - design * fit.coefficients;
    double rss = residuals.squaredNorm();
    double dof = static_cast<double>(n - k);
    fit.residual_variance = rss / dof;

    // (X'X)^-1 = P (R'R)^-1 P' from the QR factors
    Eigen::MatrixXd r = qr.matrixR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
    Eigen::MatrixXd rinv = r.inverse();
    Eigen::MatrixXd xtx_inv_perm = rinv * rinv.transpose();
    Eigen::MatrixXd xtx_inv =
        qr.colsPermutation() * xtx_inv_perm * qr.colsPermutation().transpose();

    fit.standard_errors.resize(k);
    fit.t_stats.resize(k);
    fit.p_values.resize(k);
    for (long j = 0; j < k; ++j) {
        double var = fit.residual_variance * xtx_inv(j, j);
        double se = var > 0.0 ? std::sqrt(var) : 0.0;
        fit.standard_errors(j) = se;
        if (se > 0.0) {
            fit.t_stats(j) = fit.coefficients(j) / se;
            fit.p_values(j) = student_t_two_sided_p(fit.t_stats(j), dof);
        } else {
            fit.t_stats(j) = 0.0;
            fit.p_values(j) = fit.coefficients(j) == 0.0 ? 1.0 : 0.0;
        }
    }
    return fit;
}

FitResult fit_model(const Dataset& data, const ModelSpec& spec) {
    auto dd = apply_transforms(data, spec);
    FitResult fit = fit_ols(dd.design, dd.response, dd.term_names);
    fit.outcome_name = spec.outcome.column;
    fit.outcome_transform = spec.outcome.transform;
    fit.term_transforms.clear();
    if (spec.intercept) fit.term_transforms.push_back(TransformSpec::identity());
    for (const auto& term : spec.predictors) fit.term_transforms.push_back(term.transform);
    return fit;
}

double rescale_coefficient(double beta, const LogBase& from, const LogBase& to) {
    return beta * to.log_of_base() / from.log_of_base();
}

Interpretation interpret_rhs(const FitResult& fit, const std::string& term,
                             const LogBase& b) {
    int idx = fit.term_index(term);
    if (idx < 0) {
        throw std::invalid_argument("interpret_rhs: no such term: " + term);
    }
    const auto& spec = fit.term_transforms.at(static_cast<size_t>(idx));
    if (spec.kind != TransformKind::rescaled_log &&
        spec.kind != TransformKind::rescaled_log1p) {
        throw std::invalid_argument("interpret_rhs: term " + term +
                                    " is not log-transformed with a rescaled base");
    }
    Interpretation out;
    out.linear_change = 1.0;
    out.base_p = b.p();
    // one log unit is exactly a p_b*100% change in X; the "effect" is the
    // coefficient itself, so exact and approx coincide
    out.exact_prop = fit.coefficients(idx);
    out.approx_prop = fit.coefficients(idx);
    out.error = 0.0;
    return out;
}

Interpretation interpret_lhs(const FitResult& fit, const LogBase& b, double units) {
    if (fit.outcome_transform.kind != TransformKind::rescaled_log &&
        fit.outcome_transform.kind != TransformKind::rescaled_log1p) {
        throw std::invalid_argument(
            "interpret_lhs: outcome is not log-transformed with a rescaled base");
    }
    if (fit.term_names.empty()) {
        throw std::invalid_argument("interpret_lhs: empty fit");
    }
    // slope of the first non-intercept term
    int idx = fit.term_names[0] == "(Intercept)" ? 1 : 0;
    double beta = fit.coefficients(idx) * units;
    Interpretation out;
    out.linear_change = beta;
    out.base_p = b.p();
    out.exact_prop = exact_percent_change(b, beta);
    out.approx_prop = beta * b.p();
    out.error = out.approx_prop - out.exact_prop;
    return out;
}

DgpKind parse_dgp(const std::string& name) {
    if (name == "linear-log") return DgpKind::linear_log;
    if (name == "log-linear") return DgpKind::log_linear;
    if (name == "log-log") return DgpKind::log_log;
    throw std::invalid_argument("unknown dgp: " + name +
                                " (expected linear-log, log-linear, or log-log)");
}

namespace {

// Reproducible N(0,1) stream: 53-bit uniforms from mt19937_64 fed through
// Box-Muller.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    double uniform() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

Dataset simulate_dataset(std::uint64_t seed, long n, DgpKind dgp,
                         const SimParams& params) {
    if (n < 10) {
        throw std::invalid_argument("simulate_dataset: n must be at least 10");
    }
    LogBase base = params.base_p == 0.0 ? LogBase::natural()
                                        : LogBase::from_p(params.base_p);
    NormalStream normals(seed);

    std::vector<double> x(static_cast<size_t>(n));
    std::vector<double> y(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        double z = normals.next();
        double eps = normals.next() * params.noise_sd;
        double xi = std::exp(params.x_log_mean + params.x_log_sd * z);
        double yi;
        switch (dgp) {
            case DgpKind::linear_log:
                yi = params.beta0 + params.beta1 * transform(xi, base) + eps;
                break;
            case DgpKind::log_linear:
                yi = inverse_transform(params.beta0 + params.beta1 * xi + eps, base);
                break;
            case DgpKind::log_log:
                yi = inverse_transform(
                    params.beta0 + params.beta1 * transform(xi, base) + eps, base);
                break;
            default:
                throw std::logic_error("unreachable dgp kind");
        }
        x[static_cast<size_t>(i)] = xi;
        y[static_cast<size_t>(i)] = yi;
    }

    Dataset data;
    data.add_column("x", std::move(x));
    data.add_column("y", std::move(y));
    return data;
}

}  // namespace relog
