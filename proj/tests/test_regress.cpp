#include <doctest.h>

#include <cmath>

#include "relog/regress.hpp"
#include "relog/tdist.hpp"

using namespace relog;

namespace {

Dataset five_point_data() {
    Dataset d;
    d.add_column("x", {1.0, 2.0, 3.0, 4.0, 5.0});
    d.add_column("y", {2.1, 3.9, 6.2, 7.8, 10.1});
    return d;
}

// Independent small-instance oracle: simple regression y = a + b x via the
// closed-form normal equations in long double.
struct SimpleFit {
    long double a, b, se_a, se_b;
};

SimpleFit simple_ols(const std::vector<double>& x, const std::vector<double>& y) {
    long double n = static_cast<long double>(x.size());
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += static_cast<long double>(x[i]) * x[i];
        sxy += static_cast<long double>(x[i]) * y[i];
    }
    long double det = n * sxx - sx * sx;
    long double b = (n * sxy - sx * sy) / det;
    long double a = (sy - b * sx) / n;
    long double rss = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        long double r = y[i] - a - b * x[i];
        rss += r * r;
    }
    long double s2 = rss / (n - 2);
    return {a, b, sqrtl(s2 * sxx / det), sqrtl(s2 * n / det)};
}

ModelSpec raw_model() {
    ModelSpec m;
    m.outcome = {"y", TransformSpec::identity()};
    m.predictors = {{"x", TransformSpec::identity()}};
    return m;
}

}  // namespace

TEST_CASE("ols matches the closed-form oracle on a 5-point dataset") {
    Dataset d = five_point_data();
    FitResult fit = fit_model(d, raw_model());
    SimpleFit oracle = simple_ols(d.column("x"), d.column("y"));

    REQUIRE(fit.term_names.size() == 2);
    CHECK(fit.term_names[0] == "(Intercept)");
    CHECK(fit.coefficients(0) == doctest::Approx((double)oracle.a).epsilon(1e-10));
    CHECK(fit.coefficients(1) == doctest::Approx((double)oracle.b).epsilon(1e-10));
    CHECK(fit.standard_errors(0) == doctest::Approx((double)oracle.se_a).epsilon(1e-10));
    CHECK(fit.standard_errors(1) == doctest::Approx((double)oracle.se_b).epsilon(1e-10));
    CHECK(fit.n == 5);
    CHECK(fit.t_stats(1) ==
          doctest::Approx(fit.coefficients(1) / fit.standard_errors(1)).epsilon(1e-12));
    CHECK(fit.p_values(1) ==
          doctest::Approx(student_t_two_sided_p(fit.t_stats(1), 3.0)).epsilon(1e-12));
}

TEST_CASE("exact line gives zero standard errors") {
    Dataset d;
    d.add_column("x", {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
    d.add_column("y", {2.0, 4.0, 6.0, 8.0, 10.0, 12.0});
    FitResult fit = fit_model(d, raw_model());
    CHECK(fit.coefficients(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.coefficients(0) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(fit.standard_errors(1) < 1e-10);
}

TEST_CASE("scaling a predictor scales its coefficient and SE, not t or p") {
    Dataset d = five_point_data();
    const double c = 37.5;
    std::vector<double> scaled;
    for (double v : d.column("x")) scaled.push_back(v * c);
    d.add_column("xs", scaled);

    FitResult base = fit_model(d, raw_model());
    ModelSpec m2 = raw_model();
    m2.predictors[0].column = "xs";
    FitResult scaled_fit = fit_model(d, m2);

    CHECK(scaled_fit.coefficients(1) ==
          doctest::Approx(base.coefficients(1) / c).epsilon(1e-10));
    CHECK(scaled_fit.standard_errors(1) ==
          doctest::Approx(base.standard_errors(1) / c).epsilon(1e-10));
    CHECK(scaled_fit.t_stats(1) == doctest::Approx(base.t_stats(1)).epsilon(1e-10));
    CHECK(scaled_fit.p_values(1) == doctest::Approx(base.p_values(1)).epsilon(1e-10));
}

TEST_CASE("rescale equivalence against the natural-log fit") {
    Dataset d = simulate_dataset(11, 200, DgpKind::linear_log, {});
    LogBase b11 = LogBase::from_p(0.1);

    ModelSpec natural;
    natural.outcome = {"y", TransformSpec::identity()};
    natural.predictors = {{"x", TransformSpec::natural_log()}};
    ModelSpec rescaled = natural;
    rescaled.predictors[0].transform = TransformSpec::rescaled_log(b11);

    FitResult fn = fit_model(d, natural);
    FitResult fr = fit_model(d, rescaled);
    CHECK(fr.coefficients(1) ==
          doctest::Approx(fn.coefficients(1) * b11.log_of_base()).epsilon(1e-10));
    CHECK(fr.t_stats(1) == doctest::Approx(fn.t_stats(1)).epsilon(1e-10));
    CHECK(fr.p_values(1) == doctest::Approx(fn.p_values(1)).epsilon(1e-10));
}

TEST_CASE("same-base rescaling of both sides leaves the slope unchanged") {
    Dataset d = simulate_dataset(23, 200, DgpKind::log_log, {});
    LogBase b11 = LogBase::from_p(0.1);

    ModelSpec natural;
    natural.outcome = {"y", TransformSpec::natural_log()};
    natural.predictors = {{"x", TransformSpec::natural_log()}};
    ModelSpec rescaled;
    rescaled.outcome = {"y", TransformSpec::rescaled_log(b11)};
    rescaled.predictors = {{"x", TransformSpec::rescaled_log(b11)}};

    FitResult fn = fit_model(d, natural);
    FitResult fr = fit_model(d, rescaled);
    CHECK(fr.coefficients(1) == doctest::Approx(fn.coefficients(1)).epsilon(1e-10));
}

TEST_CASE("left-side-only rescaling scales every coefficient by 1/ln(1+p)") {
    Dataset d = simulate_dataset(31, 150, DgpKind::log_linear, {});
    LogBase b11 = LogBase::from_p(0.1);

    ModelSpec natural;
    natural.outcome = {"y", TransformSpec::natural_log()};
    natural.predictors = {{"x", TransformSpec::identity()}};
    ModelSpec rescaled = natural;
    rescaled.outcome.transform = TransformSpec::rescaled_log(b11);

    FitResult fn = fit_model(d, natural);
    FitResult fr = fit_model(d, rescaled);
    for (int j = 0; j < 2; ++j) {
        CHECK(fr.coefficients(j) ==
              doctest::Approx(fn.coefficients(j) / b11.log_of_base()).epsilon(1e-10));
        CHECK(fr.standard_errors(j) ==
              doctest::Approx(fn.standard_errors(j) / b11.log_of_base()).epsilon(1e-10));
    }
}

TEST_CASE("residuals are orthogonal to the design") {
    Dataset d = simulate_dataset(5, 100, DgpKind::linear_log, {});
    ModelSpec m;
    m.outcome = {"y", TransformSpec::identity()};
    m.predictors = {{"x", TransformSpec::natural_log()},
                    {"x", TransformSpec::identity()}};
    // duplicate column names in term list are fine, they are distinct transforms
    m.predictors[1].column = "x";
    auto dd = apply_transforms(d, m);
    // direct fit on the design to keep access to residuals
    FitResult fit = fit_ols(dd.design, dd.response, dd.term_names);
    Eigen::VectorXd resid = dd.response - dd.design * fit.coefficients;
    for (long j = 0; j < dd.design.cols(); ++j) {
        double ip = std::fabs(resid.dot(dd.design.col(j)));
        CHECK(ip <= 1e-8 * dd.design.col(j).norm() * std::max(1.0, resid.norm()));
    }
}

TEST_CASE("rank deficiency names the dependent column") {
    Dataset d = five_point_data();
    std::vector<double> copy = d.column("x");
    d.add_column("x2", copy);
    ModelSpec m = raw_model();
    m.predictors.push_back({"x2", TransformSpec::identity()});
    CHECK_THROWS_WITH_AS(fit_model(d, m), doctest::Contains("rank deficient"),
                         std::invalid_argument);
}

TEST_CASE("insufficient data is reported") {
    Dataset d;
    d.add_column("x", {1.0, 2.0});
    d.add_column("y", {1.0, 2.0});
    CHECK_THROWS_WITH_AS(fit_model(d, raw_model()), doctest::Contains("insufficient"),
                         std::invalid_argument);
}

TEST_CASE("apply_transforms") {
    Dataset d;
    d.add_column("x", {1.1, 1.1, 1.1, 2.0, 3.0});
    d.add_column("y", {1.0, 2.0, 3.0, 4.0, 5.0});
    LogBase b11 = LogBase::from_p(0.1);

    ModelSpec m;
    m.outcome = {"y", TransformSpec::identity()};
    m.predictors = {{"x", TransformSpec::rescaled_log(b11)}};
    auto dd = apply_transforms(d, m);
    for (int i = 0; i < 3; ++i) {
        CHECK(dd.design(i, 1) == doctest::Approx(1.0).epsilon(1e-14));
    }
    // change-of-base: rescaled column is the natural-log column over ln(1.1)
    ModelSpec mn = m;
    mn.predictors[0].transform = TransformSpec::natural_log();
    auto ddn = apply_transforms(d, mn);
    for (int i = 0; i < 5; ++i) {
        CHECK(dd.design(i, 1) ==
              doctest::Approx(ddn.design(i, 1) / b11.log_of_base()).epsilon(1e-14));
    }

    // identity passthrough
    ModelSpec mi;
    mi.outcome = {"y", TransformSpec::identity()};
    mi.predictors = {{"x", TransformSpec::identity()}};
    auto ddi = apply_transforms(d, mi);
    CHECK(ddi.design(4, 1) == 3.0);

    // first offending row is reported
    Dataset dz;
    dz.add_column("x", {1.0, 0.0, 2.0});
    dz.add_column("y", {1.0, 2.0, 3.0});
    ModelSpec mz;
    mz.outcome = {"y", TransformSpec::identity()};
    mz.predictors = {{"x", TransformSpec::natural_log()}};
    CHECK_THROWS_WITH_AS(apply_transforms(dz, mz), doctest::Contains("row 2"),
                         std::invalid_argument);
}

TEST_CASE("rescale_coefficient") {
    LogBase b11 = LogBase::from_p(0.1);
    LogBase b2 = LogBase::from_base(2.0);
    CHECK(rescale_coefficient(-0.3145, b11, b2) == doctest::Approx(-2.29).epsilon(2e-3));
    CHECK(rescale_coefficient(-0.3145, b11, b2) ==
          doctest::Approx(-0.3145 * std::log(2.0) / std::log(1.1)).epsilon(1e-12));
    CHECK(rescale_coefficient(0.7, b11, b11) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(rescale_coefficient(-1.083, LogBase::natural(), b11) ==
          doctest::Approx(-0.1032).epsilon(1e-3));

    // round trip
    for (double beta : {-2.0, -0.5, 0.1, 3.0}) {
        double there = rescale_coefficient(beta, b11, b2);
        CHECK(rescale_coefficient(there, b2, b11) == doctest::Approx(beta).epsilon(1e-12));
    }
}

TEST_CASE("interpretation helpers") {
    Dataset d = simulate_dataset(3, 100, DgpKind::linear_log, {});
    LogBase b11 = LogBase::from_p(0.1);

    ModelSpec m;
    m.outcome = {"y", TransformSpec::identity()};
    m.predictors = {{"x", TransformSpec::rescaled_log(b11)}};
    FitResult fit = fit_model(d, m);

    Interpretation rhs = interpret_rhs(fit, "x", b11);
    CHECK(rhs.exact_prop == doctest::Approx(fit.coefficients(1)).epsilon(1e-15));
    CHECK(rhs.error == 0.0);
    CHECK_THROWS_AS(interpret_rhs(fit, "nope", b11), std::invalid_argument);

    ModelSpec raw;
    raw.outcome = {"y", TransformSpec::identity()};
    raw.predictors = {{"x", TransformSpec::identity()}};
    FitResult raw_fit = fit_model(d, raw);
    CHECK_THROWS_AS(interpret_rhs(raw_fit, "x", b11), std::invalid_argument);
    CHECK_THROWS_AS(interpret_lhs(raw_fit, b11), std::invalid_argument);

    ModelSpec lhs_model;
    lhs_model.outcome = {"y", TransformSpec::rescaled_log(b11)};
    lhs_model.predictors = {{"x", TransformSpec::identity()}};
    Dataset dl = simulate_dataset(3, 100, DgpKind::log_linear, {});
    FitResult lfit = fit_model(dl, lhs_model);
    Interpretation lhs = interpret_lhs(lfit, b11);
    double beta = lfit.coefficients(1);
    CHECK(lhs.exact_prop == doctest::Approx(std::pow(1.1, beta) - 1.0).epsilon(1e-12));
    CHECK(lhs.approx_prop == doctest::Approx(beta * 0.1).epsilon(1e-12));
}

TEST_CASE("lhs interpretation for a fixed coefficient") {
    // a coefficient of 2.001 reads as 20.01% approximately, 21.01% exactly
    LogBase b11 = LogBase::from_p(0.1);
    double beta = 2.001;
    double exact = exact_percent_change(b11, beta);
    CHECK(beta * 0.1 == doctest::Approx(0.2001).epsilon(1e-12));
    CHECK(exact == doctest::Approx(0.2101).epsilon(1e-3));
}

TEST_CASE("simulation determinism and parameter checks") {
    Dataset a = simulate_dataset(99, 50, DgpKind::linear_log, {});
    Dataset b = simulate_dataset(99, 50, DgpKind::linear_log, {});
    for (size_t i = 0; i < a.n(); ++i) {
        CHECK(a.column("x")[i] == b.column("x")[i]);
        CHECK(a.column("y")[i] == b.column("y")[i]);
    }
    Dataset c = simulate_dataset(100, 50, DgpKind::linear_log, {});
    CHECK(a.column("x")[0] != c.column("x")[0]);

    CHECK_THROWS_AS(simulate_dataset(1, 5, DgpKind::linear_log, {}), std::invalid_argument);
    CHECK_THROWS_AS(parse_dgp("cubic"), std::invalid_argument);
    CHECK(parse_dgp("log-log") == DgpKind::log_log);
}

TEST_CASE("simulated slope is recovered") {
    SimParams params;
    params.beta1 = 0.2;
    params.noise_sd = 0.05;
    Dataset d = simulate_dataset(17, 1000, DgpKind::linear_log, params);
    ModelSpec m;
    m.outcome = {"y", TransformSpec::identity()};
    m.predictors = {{"x", TransformSpec::rescaled_log(LogBase::from_p(0.1))}};
    FitResult fit = fit_model(d, m);
    CHECK(std::fabs(fit.coefficients(1) - 0.2) < 3.0 * fit.standard_errors(1));
}

TEST_CASE("t distribution") {
    CHECK(student_t_two_sided_p(0.0, 10.0) == doctest::Approx(1.0).epsilon(1e-12));
    // Cauchy: |t| = 1 leaves half the mass in the tails
    CHECK(student_t_two_sided_p(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
    // t_10 97.5th percentile
    CHECK(student_t_two_sided_p(2.228138852, 10.0) == doctest::Approx(0.05).epsilon(1e-6));
    CHECK(student_t_two_sided_p(-2.228138852, 10.0) ==
          student_t_two_sided_p(2.228138852, 10.0));
    // I_x(1, b) = 1 - (1-x)^b
    for (double x : {0.1, 0.5, 0.9}) {
        for (double b : {0.5, 2.0, 7.0}) {
            CHECK(incomplete_beta(1.0, b, x) ==
                  doctest::Approx(1.0 - std::pow(1.0 - x, b)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(incomplete_beta(0.0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(incomplete_beta(1.0, 1.0, 1.5), std::invalid_argument);
}
