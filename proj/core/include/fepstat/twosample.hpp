#pragma once

#include <cstdint>
#include <string>

#include "fepstat/accuracy.hpp"
#include "fepstat/interval.hpp"
#include "fepstat/moments.hpp"

namespace fepstat {

/// How the per-sample fourth-moment statistics entering the general
/// variance-ratio normalizer are scaled.  TheoremScaled divides them by
/// powers of the second sample's variance, which is the choice that makes
/// the ratio estimator's limiting variance equal 1 (and the one that
/// actually covers at the nominal rate; see the coverage tests).
/// TableUnscaled keeps the raw per-sample statistics; it is retained for
/// comparison because it mis-covers badly once the denominator variance
/// is far from 1.
enum class RatioNormalization : std::uint8_t { TheoremScaled, TableUnscaled };

[[nodiscard]] std::string to_string(RatioNormalization m);

/// The plug-in normalizers of the general two-sample procedures:
///   a_hat: scales the variance-ratio estimator (per the chosen mode);
///   b_hat: scales the mean-difference estimator,
///          b_hat = sqrt(n1 n2 / (n2 S1^2 + n1 S2^2)), so that
///          1/b_hat^2 = S1^2/n1 + S2^2/n2;
///   welch_f: the Welch-Satterthwaite effective degrees of freedom.
struct TwoSampleNormalizers {
    double a_hat = 0.0;
    double b_hat = 0.0;
    double welch_f = 0.0;
};

/// Computes all three normalizers; throws inapplicable_error when any is
/// undefined for the given samples (see the individual preconditions on
/// the interval constructors below).
TwoSampleNormalizers two_sample_normalizers(
    const SampleSummary& x, const SampleSummary& y,
    RatioNormalization mode = RatioNormalization::TheoremScaled);

/// Pooled variance ((n1-1)S1^2 + (n2-1)S2^2) / (n1+n2-2); needs
/// n1 + n2 >= 3, both n >= 1.
double pooled_s2(const SampleSummary& x, const SampleSummary& y);
double pooled_s2(const Sample& x, const Sample& y);

/// Welch-Satterthwaite degrees of freedom
///   f = (S1^2/n1 + S2^2/n2)^2
///       / ((S1^2/n1)^2/(n1-1) + (S2^2/n2)^2/(n2-1));
/// needs both sample variances > 0; always lies in
/// [min(n1,n2)-1, n1+n2-2].
double welch_df(const SampleSummary& x, const SampleSummary& y);
double welch_df(const Sample& x, const Sample& y);

/// Variance-ratio interval from the exact F pivot (Gaussian data):
/// [S1^2/(S2^2 f_{1-a/2}), S1^2/(S2^2 f_{a/2})] with f quantiles at
/// (n1-1, n2-1) degrees of freedom.  Needs both variances > 0.
ConfidenceInterval ci_ratio_gaussian(const SampleSummary& x, const SampleSummary& y,
                                     double alpha, const Accuracy& acc = {});
ConfidenceInterval ci_ratio_gaussian(const Sample& x, const Sample& y,
                                     double alpha, const Accuracy& acc = {});

/// Variance-ratio interval from the asymptotic z pivot:
/// S1^2/S2^2 -+ z_{1-a/2}/a_hat.  Needs both fourth-moment statistics
/// mu4 - s2^2 strictly positive.  A negative lower endpoint is clamped
/// to 0 (truncated_at_zero set, raw value kept in raw_lower).
ConfidenceInterval ci_ratio_general(const SampleSummary& x, const SampleSummary& y,
                                    double alpha,
                                    RatioNormalization mode = RatioNormalization::TheoremScaled,
                                    const Accuracy& acc = {});
ConfidenceInterval ci_ratio_general(const Sample& x, const Sample& y,
                                    double alpha,
                                    RatioNormalization mode = RatioNormalization::TheoremScaled,
                                    const Accuracy& acc = {});

/// Mean-difference interval, equal-variance pooled t pivot at
/// n1+n2-2 degrees of freedom.  Needs pooled variance > 0.
ConfidenceInterval ci_dm_pooled(const SampleSummary& x, const SampleSummary& y,
                                double alpha, const Accuracy& acc = {});
ConfidenceInterval ci_dm_pooled(const Sample& x, const Sample& y,
                                double alpha, const Accuracy& acc = {});

/// Mean-difference interval, Welch t pivot at welch_df degrees of
/// freedom with standard error sqrt(S1^2/n1 + S2^2/n2).
ConfidenceInterval ci_dm_welch(const SampleSummary& x, const SampleSummary& y,
                               double alpha, const Accuracy& acc = {});
ConfidenceInterval ci_dm_welch(const Sample& x, const Sample& y,
                               double alpha, const Accuracy& acc = {});

/// Mean-difference interval, asymptotic z pivot with the same standard
/// error 1/b_hat = sqrt(S1^2/n1 + S2^2/n2); valid without any variance
/// equality assumption.  Needs at least one variance > 0.
ConfidenceInterval ci_dm_general(const SampleSummary& x, const SampleSummary& y,
                                 double alpha, const Accuracy& acc = {});
ConfidenceInterval ci_dm_general(const Sample& x, const Sample& y,
                                 double alpha, const Accuracy& acc = {});

}  // namespace fepstat
