#pragma once

#include "fepstat/accuracy.hpp"
#include "fepstat/interval.hpp"
#include "fepstat/moments.hpp"

namespace fepstat {

/// One-sample confidence intervals for the mean and the variance, each in
/// two flavors:
///   - "gaussian": exact pivots (Student t for the mean, chi-square for
///     the variance) that assume normally distributed data;
///   - "general": asymptotic standard-normal pivots with plug-in
///     normalizers (S_n for the mean, T_n = sqrt(mu4 - s2^2) for the
///     variance) that assume only finite fourth moments.
///
/// All constructors require n >= 2 and nonzero sample variance and throw
/// inapplicable_error otherwise; alpha outside (0, 1) is a domain error.
/// The summary overloads are the fast path for simulation loops that
/// already computed the moments.

ConfidenceInterval ci_mean_gaussian(const SampleSummary& s, double alpha, const Accuracy& acc = {});
ConfidenceInterval ci_mean_gaussian(const Sample& s, double alpha, const Accuracy& acc = {});

ConfidenceInterval ci_mean_general(const SampleSummary& s, double alpha, const Accuracy& acc = {});
ConfidenceInterval ci_mean_general(const Sample& s, double alpha, const Accuracy& acc = {});

ConfidenceInterval ci_var_gaussian(const SampleSummary& s, double alpha, const Accuracy& acc = {});
ConfidenceInterval ci_var_gaussian(const Sample& s, double alpha, const Accuracy& acc = {});

/// General variance interval S_n^2 -+ T_n z / sqrt(n).  Additionally
/// requires t2 > 0 (the plug-in normalizer can be nonpositive at small n
/// because it mixes divisor-n and divisor-(n-1) moments); a negative
/// lower endpoint is clamped to 0 with truncated_at_zero set and the raw
/// value kept in raw_lower.
ConfidenceInterval ci_var_general(const SampleSummary& s, double alpha, const Accuracy& acc = {});
ConfidenceInterval ci_var_general(const Sample& s, double alpha, const Accuracy& acc = {});

/// Elementwise differences of two equally sized samples (n >= 2), for
/// running paired two-sample inference through the one-sample interval
/// constructors.
Sample paired_reduce(const Sample& x, const Sample& y);

}  // namespace fepstat
