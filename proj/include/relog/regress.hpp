#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relog/interpret.hpp"
#include "relog/logbase.hpp"

namespace relog {

enum class TransformKind {
    identity,
    natural_log,
    rescaled_log,
    rescaled_log1p,
    asinh,
};

struct TransformSpec {
    TransformKind kind = TransformKind::identity;
    std::optional<LogBase> base;  // present for rescaled kinds only

    static TransformSpec identity();
    static TransformSpec natural_log();
    static TransformSpec rescaled_log(const LogBase& b);
    static TransformSpec rescaled_log1p(const LogBase& b);
    static TransformSpec asinh();

    double apply(double x) const;
    std::string describe() const;
};

/// Named columns of equal length.
class Dataset {
public:
    void add_column(const std::string& name, std::vector<double> values);
    const std::vector<double>& column(const std::string& name) const;
    bool has_column(const std::string& name) const;
    const std::vector<std::string>& names() const { return names_; }
    size_t n() const;
    bool empty() const { return names_.empty(); }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
};

struct ModelTerm {
    std::string column;
    TransformSpec transform;
};

struct ModelSpec {
    ModelTerm outcome;
    std::vector<ModelTerm> predictors;
    bool intercept = true;
};

struct FitResult {
    std::vector<std::string> term_names;     // includes "(Intercept)" if present
    std::vector<TransformSpec> term_transforms;
    TransformSpec outcome_transform;
    std::string outcome_name;
    Eigen::VectorXd coefficients;
    Eigen::VectorXd standard_errors;
    Eigen::VectorXd t_stats;
    Eigen::VectorXd p_values;
    long n = 0;
    double residual_variance = 0.0;

    int term_index(const std::string& name) const;  // -1 if absent
};

struct DesignData {
    Eigen::MatrixXd design;
    Eigen::VectorXd response;
    std::vector<std::string> term_names;
};

DesignData apply_transforms(const Dataset& data, const ModelSpec& spec);

// OLS with classical standard errors, solved by column-pivoted
// Householder QR.
FitResult fit_ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                  const std::vector<std::string>& term_names);

// apply_transforms + fit_ols, keeping transform metadata for labeling.
FitResult fit_model(const Dataset& data, const ModelSpec& spec);

// beta * ln(1+p_to)/ln(1+p_from); applies identically to standard errors.
double rescale_coefficient(double beta, const LogBase& from, const LogBase& to);

// Exact statement for a rescaled-log predictor: a p_b*100% increase in X
// associates with a coefficient-sized change in Y.
Interpretation interpret_rhs(const FitResult& fit, const std::string& term,
                             const LogBase& b);

// Rescaled-log outcome: exact (1+p_b)^beta - 1 vs approximate beta*p_b.
Interpretation interpret_lhs(const FitResult& fit, const LogBase& b,
                             double units = 1.0);

enum class DgpKind { linear_log, log_linear, log_log };

DgpKind parse_dgp(const std::string& name);

struct SimParams {
    double beta0 = 1.0;
    double beta1 = 0.2;
    double noise_sd = 0.1;
    double base_p = 0.1;     // 0 selects the natural log
    double x_log_mean = 0.0;
    double x_log_sd = 1.0;
};

// Deterministic given seed: X is log-normal, noise is Gaussian on the
// model's transformed scale. Draws use mt19937_64 with Box-Muller so the
// stream is reproducible across platforms.
Dataset simulate_dataset(std::uint64_t seed, long n, DgpKind dgp,
                         const SimParams& params);

}  // namespace relog
