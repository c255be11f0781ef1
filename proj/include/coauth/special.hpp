#pragma once

namespace coauth {

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
/// evaluated by Lentz's continued fraction (relative tolerance 1e-12).
/// NaN outside that domain.
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided tail P(|T| >= |t|) of Student's t with `df` degrees of
/// freedom (df may be fractional, e.g. Welch-Satterthwaite).
double student_t_two_sided_p(double t, double df);

}  // namespace coauth
