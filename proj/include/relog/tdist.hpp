#pragma once

namespace relog {

// Regularized incomplete beta function I_x(a, b), continued-fraction
// evaluation.
double incomplete_beta(double a, double b, double x);

// Two-sided p-value for a t statistic with nu degrees of freedom.
double student_t_two_sided_p(double t, double nu);

}  // namespace relog
