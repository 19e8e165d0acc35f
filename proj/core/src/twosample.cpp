#include "fepstat/twosample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fepstat/dist.hpp"
#include "fepstat/errors.hpp"

namespace fepstat {
namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("confidence interval: alpha must lie strictly in (0, 1)");
}

void require_sizes(const SampleSummary& x, const SampleSummary& y, const char* what) {
    if (x.n < 2 || y.n < 2)
        throw inapplicable_error(std::string(what) + ": both samples need at least 2 observations");
}

double require_s2(const SampleSummary& s, const char* what) {
    if (!s.s2 || !(*s.s2 > 0.0))
        throw inapplicable_error(std::string(what) + ": sample variance is zero (degenerate sample)");
    return *s.s2;
}

double require_t2(const SampleSummary& s, const char* what) {
    if (!s.t2 || !(*s.t2 > 0.0))
        throw inapplicable_error(
            std::string(what) + ": fourth-moment statistic nonpositive; method inapplicable at this n");
    return *s.t2;
}

// z_{1-alpha/2} / a_hat for the chosen normalization mode.
double ratio_margin(const SampleSummary& x, const SampleSummary& y, double alpha,
                    RatioNormalization mode, const Accuracy& acc, const char* what) {
    const double t2x = require_t2(x, what);
    const double t2y = require_t2(y, what);
    const double s2x = *x.s2;
    const double s2y = require_s2(y, what);
    double T1sq = t2x;
    double T2sq = t2y;
    if (mode == RatioNormalization::TheoremScaled) {
        const double s2y2 = s2y * s2y;
        T1sq = t2x / s2y2;
        T2sq = s2x * s2x * t2y / (s2y2 * s2y2);
    }
    const double n1 = static_cast<double>(x.n);
    const double n2 = static_cast<double>(y.n);
    const double inv_a_sq = (n1 * T2sq + n2 * T1sq) / (n1 * n2);
    const double z = quantile(Distribution::normal(), 1.0 - 0.5 * alpha, acc);
    return z * std::sqrt(inv_a_sq);
}

ConfidenceInterval dm_interval(const SampleSummary& x, const SampleSummary& y,
                               double alpha, double margin, Method method) {
    ConfidenceInterval ci;
    ci.point = x.mean - y.mean;
    ci.lower = ci.point - margin;
    ci.upper = ci.point + margin;
    ci.level = 1.0 - alpha;
    ci.target = Target::MeanDifference;
    ci.method = method;
    ci.raw_lower = ci.lower;
    return ci;
}

double welch_se2(const SampleSummary& x, const SampleSummary& y) {
    return *x.s2 / static_cast<double>(x.n) + *y.s2 / static_cast<double>(y.n);
}

}  // namespace

std::string to_string(RatioNormalization m) {
    return m == RatioNormalization::TheoremScaled ? "theorem" : "table-unscaled";
}

double pooled_s2(const SampleSummary& x, const SampleSummary& y) {
    if (x.n < 1 || y.n < 1 || x.n + y.n < 3)
        throw inapplicable_error("pooled_s2: needs n1 + n2 >= 3");
    const double n1 = static_cast<double>(x.n);
    const double n2 = static_cast<double>(y.n);
    const double ssx = x.s2 ? (n1 - 1.0) * *x.s2 : 0.0;
    const double ssy = y.s2 ? (n2 - 1.0) * *y.s2 : 0.0;
    return (ssx + ssy) / (n1 + n2 - 2.0);
}

double welch_df(const SampleSummary& x, const SampleSummary& y) {
    require_sizes(x, y, "welch_df");
    const double s2x = require_s2(x, "welch_df");
    const double s2y = require_s2(y, "welch_df");
    const double ax = s2x / static_cast<double>(x.n);
    const double ay = s2y / static_cast<double>(y.n);
    const double num = (ax + ay) * (ax + ay);
    const double den = ax * ax / (static_cast<double>(x.n) - 1.0) +
                       ay * ay / (static_cast<double>(y.n) - 1.0);
    return num / den;
}

TwoSampleNormalizers two_sample_normalizers(const SampleSummary& x, const SampleSummary& y,
                                            RatioNormalization mode) {
    require_sizes(x, y, "two_sample_normalizers");
    TwoSampleNormalizers out;
    out.welch_f = welch_df(x, y);
    out.b_hat = 1.0 / std::sqrt(welch_se2(x, y));
    // Recover a_hat from the margin helper at a fixed dummy alpha.
    const Accuracy acc;
    const double z = quantile(Distribution::normal(), 0.975, acc);
    out.a_hat = z / ratio_margin(x, y, 0.05, mode, acc, "two_sample_normalizers");
    return out;
}

ConfidenceInterval ci_ratio_gaussian(const SampleSummary& x, const SampleSummary& y,
                                     double alpha, const Accuracy& acc) {
    check_alpha(alpha);
    require_sizes(x, y, "ci_ratio_gaussian");
    const double s2x = require_s2(x, "ci_ratio_gaussian");
    const double s2y = require_s2(y, "ci_ratio_gaussian");
    const auto f = Distribution::fisher_f(static_cast<double>(x.n) - 1.0,
                                          static_cast<double>(y.n) - 1.0);
    const double f_hi = quantile(f, 1.0 - 0.5 * alpha, acc);
    const double f_lo = quantile(f, 0.5 * alpha, acc);
    ConfidenceInterval ci;
    ci.point = s2x / s2y;
    ci.lower = ci.point / f_hi;
    ci.upper = ci.point / f_lo;
    ci.level = 1.0 - alpha;
    ci.target = Target::VarianceRatio;
    ci.method = Method::GaussianExact;
    ci.raw_lower = ci.lower;
    return ci;
}

ConfidenceInterval ci_ratio_general(const SampleSummary& x, const SampleSummary& y,
                                    double alpha, RatioNormalization mode, const Accuracy& acc) {
    check_alpha(alpha);
    require_sizes(x, y, "ci_ratio_general");
    const double margin = ratio_margin(x, y, alpha, mode, acc, "ci_ratio_general");
    ConfidenceInterval ci;
    ci.point = *x.s2 / *y.s2;
    ci.raw_lower = ci.point - margin;
    ci.truncated_at_zero = ci.raw_lower < 0.0;
    ci.lower = ci.truncated_at_zero ? 0.0 : ci.raw_lower;
    ci.upper = ci.point + margin;
    ci.level = 1.0 - alpha;
    ci.target = Target::VarianceRatio;
    ci.method = Method::General;
    return ci;
}

ConfidenceInterval ci_dm_pooled(const SampleSummary& x, const SampleSummary& y,
                                double alpha, const Accuracy& acc) {
    check_alpha(alpha);
    require_sizes(x, y, "ci_dm_pooled");
    const double sp2 = pooled_s2(x, y);
    if (!(sp2 > 0.0))
        throw inapplicable_error("ci_dm_pooled: pooled variance is zero (degenerate samples)");
    const double df = static_cast<double>(x.n) + static_cast<double>(y.n) - 2.0;
    const double q = quantile(Distribution::student_t(df), 1.0 - 0.5 * alpha, acc);
    const double margin =
        q * std::sqrt(sp2 * (1.0 / static_cast<double>(x.n) + 1.0 / static_cast<double>(y.n)));
    return dm_interval(x, y, alpha, margin, Method::GaussianPooled);
}

ConfidenceInterval ci_dm_welch(const SampleSummary& x, const SampleSummary& y,
                               double alpha, const Accuracy& acc) {
    check_alpha(alpha);
    require_sizes(x, y, "ci_dm_welch");
    const double f = welch_df(x, y);
    const double q = quantile(Distribution::student_t(f), 1.0 - 0.5 * alpha, acc);
    const double margin = q * std::sqrt(welch_se2(x, y));
    return dm_interval(x, y, alpha, margin, Method::GaussianWelch);
}

ConfidenceInterval ci_dm_general(const SampleSummary& x, const SampleSummary& y,
                                 double alpha, const Accuracy& acc) {
    check_alpha(alpha);
    require_sizes(x, y, "ci_dm_general");
    if ((!x.s2 || *x.s2 == 0.0) && (!y.s2 || *y.s2 == 0.0))
        throw inapplicable_error("ci_dm_general: both sample variances are zero");
    const double se2 = (x.s2 ? *x.s2 : 0.0) / static_cast<double>(x.n) +
                       (y.s2 ? *y.s2 : 0.0) / static_cast<double>(y.n);
    const double z = quantile(Distribution::normal(), 1.0 - 0.5 * alpha, acc);
    return dm_interval(x, y, alpha, z * std::sqrt(se2), Method::General);
}

double pooled_s2(const Sample& x, const Sample& y) {
    return pooled_s2(summarize(x), summarize(y));
}
double welch_df(const Sample& x, const Sample& y) {
    return welch_df(summarize(x), summarize(y));
}
ConfidenceInterval ci_ratio_gaussian(const Sample& x, const Sample& y, double alpha,
                                     const Accuracy& acc) {
    return ci_ratio_gaussian(summarize(x), summarize(y), alpha, acc);
}
ConfidenceInterval ci_ratio_general(const Sample& x, const Sample& y, double alpha,
                                    RatioNormalization mode, const Accuracy& acc) {
    return ci_ratio_general(summarize(x), summarize(y), alpha, mode, acc);
}
ConfidenceInterval ci_dm_pooled(const Sample& x, const Sample& y, double alpha,
                                const Accuracy& acc) {
    return ci_dm_pooled(summarize(x), summarize(y), alpha, acc);
}
ConfidenceInterval ci_dm_welch(const Sample& x, const Sample& y, double alpha,
                               const Accuracy& acc) {
    return ci_dm_welch(summarize(x), summarize(y), alpha, acc);
}
ConfidenceInterval ci_dm_general(const Sample& x, const Sample& y, double alpha,
                                 const Accuracy& acc) {
    return ci_dm_general(summarize(x), summarize(y), alpha, acc);
}

}  // namespace fepstat
