#pragma once

#include "fepstat/accuracy.hpp"

namespace fepstat {

// Special functions backing the distribution CDFs and quantiles.
// All of them are pure functions: no shared state, safe to call from any
// number of threads. Inputs outside the stated domains throw
// std::domain_error; they are never clamped.

/// ln Gamma(x) for x > 0, Lanczos approximation.
double ln_gamma(double x);

/// Error function, exactly odd in x: erf(-x) == -erf(x) bitwise.
double erf(double x, const Accuracy& acc = {});

/// Regularized lower incomplete gamma P(a, x) = gamma(a,x) / Gamma(a),
/// for a > 0, x >= 0. Series expansion for x < a + 1, Lentz continued
/// fraction otherwise.
double reg_inc_gamma_P(double a, double x, const Accuracy& acc = {});

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed on
/// the branch that keeps the tail accurate.
double reg_inc_gamma_Q(double a, double x, const Accuracy& acc = {});

/// Regularized incomplete beta I_x(a, b) for x in [0, 1], a, b > 0.
/// Continued fraction with the symmetry switch at x > (a+1)/(a+b+2).
double reg_inc_beta(double x, double a, double b, const Accuracy& acc = {});

}  // namespace fepstat
