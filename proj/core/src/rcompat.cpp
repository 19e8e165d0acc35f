#include "fepstat/rcompat.hpp"

#include <cmath>
#include <stdexcept>

#include "fepstat/dist.hpp"
#include "fepstat/errors.hpp"

namespace fepstat::rcompat {

ConfidenceInterval ci_var_general(const SampleSummary& s, double alpha, const Accuracy& acc) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("confidence interval: alpha must lie strictly in (0, 1)");
    if (s.n < 2)
        throw inapplicable_error("rcompat::ci_var_general: needs at least 2 observations");
    if (!s.s2 || !(*s.s2 > 0.0))
        throw inapplicable_error("rcompat::ci_var_general: sample variance is zero");
    if (!s.t2 || !(*s.t2 > 0.0))
        throw inapplicable_error(
            "rcompat::ci_var_general: fourth-moment statistic nonpositive; method inapplicable");
    const double s2 = *s.s2;
    const double z = quantile(Distribution::normal(), 1.0 - 0.5 * alpha, acc);
    const double margin = std::sqrt(*s.t2 / static_cast<double>(s.n)) * z;
    ConfidenceInterval ci;
    // The script's arithmetic: amp = s2 - margin; [s2 - amp, s2 + amp].
    const double amp = s2 - margin;
    ci.lower = s2 - amp;
    ci.upper = s2 + amp;
    ci.level = 1.0 - alpha;
    ci.point = s2;
    ci.target = Target::Variance;
    ci.method = Method::General;
    ci.raw_lower = ci.lower;
    return ci;
}

ConfidenceInterval ci_dm_welch(const SampleSummary& x, const SampleSummary& y,
                               double alpha, const Accuracy& acc) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("confidence interval: alpha must lie strictly in (0, 1)");
    if (x.n < 2 || y.n < 2)
        throw inapplicable_error("rcompat::ci_dm_welch: both samples need at least 2 observations");
    if (!x.s2 || !(*x.s2 > 0.0) || !y.s2 || !(*y.s2 > 0.0))
        throw inapplicable_error("rcompat::ci_dm_welch: sample variance is zero");
    const double df = static_cast<double>(x.n) + static_cast<double>(y.n) - 2.0;
    const double q = quantile(Distribution::student_t(df), 1.0 - 0.5 * alpha, acc);
    const double se = std::sqrt(*x.s2 / static_cast<double>(x.n) + *y.s2 / static_cast<double>(y.n));
    ConfidenceInterval ci;
    ci.point = x.mean - y.mean;
    ci.lower = ci.point - q * se;
    ci.upper = ci.point + q * se;
    ci.level = 1.0 - alpha;
    ci.target = Target::MeanDifference;
    ci.method = Method::GaussianWelch;
    ci.raw_lower = ci.lower;
    return ci;
}

ConfidenceInterval ci_var_general(const Sample& s, double alpha, const Accuracy& acc) {
    return ci_var_general(summarize(s), alpha, acc);
}
ConfidenceInterval ci_dm_welch(const Sample& x, const Sample& y, double alpha, const Accuracy& acc) {
    return ci_dm_welch(summarize(x), summarize(y), alpha, acc);
}

}  // namespace fepstat::rcompat
