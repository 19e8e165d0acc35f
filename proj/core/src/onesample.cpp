#include "fepstat/onesample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "fepstat/dist.hpp"
#include "fepstat/errors.hpp"

namespace fepstat {
namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("confidence interval: alpha must lie strictly in (0, 1)");
}

// Returns the (validated) sample variance; every one-sample interval
// needs n >= 2 and nonzero spread.
double require_spread(const SampleSummary& s, const char* what) {
    if (s.n < 2)
        throw inapplicable_error(std::string(what) + ": needs at least 2 observations");
    if (!s.s2 || !(*s.s2 > 0.0))
        throw inapplicable_error(std::string(what) + ": sample variance is zero (degenerate sample)");
    return *s.s2;
}

ConfidenceInterval mean_interval(const SampleSummary& s, double alpha, double q, Method method) {
    const double margin = std::sqrt(*s.s2 / static_cast<double>(s.n)) * q;
    ConfidenceInterval ci;
    ci.lower = s.mean - margin;
    ci.upper = s.mean + margin;
    ci.level = 1.0 - alpha;
    ci.point = s.mean;
    ci.target = Target::Mean;
    ci.method = method;
    ci.raw_lower = ci.lower;
    return ci;
}

}  // namespace

ConfidenceInterval ci_mean_gaussian(const SampleSummary& s, double alpha, const Accuracy& acc) {
    check_alpha(alpha);
    require_spread(s, "ci_mean_gaussian");
    const double df = static_cast<double>(s.n) - 1.0;
    const double q = quantile(Distribution::student_t(df), 1.0 - 0.5 * alpha, acc);
    return mean_interval(s, alpha, q, Method::GaussianExact);
}

ConfidenceInterval ci_mean_general(const SampleSummary& s, double alpha, const Accuracy& acc) {
    check_alpha(alpha);
    require_spread(s, "ci_mean_general");
    const double q = quantile(Distribution::normal(), 1.0 - 0.5 * alpha, acc);
    return mean_interval(s, alpha, q, Method::General);
}

ConfidenceInterval ci_var_gaussian(const SampleSummary& s, double alpha, const Accuracy& acc) {
    check_alpha(alpha);
    const double s2 = require_spread(s, "ci_var_gaussian");
    const double df = static_cast<double>(s.n) - 1.0;
    const auto chi2 = Distribution::chi_square(df);
    const double q_hi = quantile(chi2, 1.0 - 0.5 * alpha, acc);
    const double q_lo = quantile(chi2, 0.5 * alpha, acc);
    ConfidenceInterval ci;
    ci.lower = df * s2 / q_hi;
    ci.upper = df * s2 / q_lo;
    ci.level = 1.0 - alpha;
    ci.point = s2;
    ci.target = Target::Variance;
    ci.method = Method::GaussianExact;
    ci.raw_lower = ci.lower;
    return ci;
}

ConfidenceInterval ci_var_general(const SampleSummary& s, double alpha, const Accuracy& acc) {
    check_alpha(alpha);
    const double s2 = require_spread(s, "ci_var_general");
    if (!s.t2 || !(*s.t2 > 0.0))
        throw inapplicable_error(
            "ci_var_general: fourth-moment statistic nonpositive; method inapplicable at this n");
    const double z = quantile(Distribution::normal(), 1.0 - 0.5 * alpha, acc);
    const double margin = std::sqrt(*s.t2 / static_cast<double>(s.n)) * z;
    ConfidenceInterval ci;
    ci.raw_lower = s2 - margin;
    ci.truncated_at_zero = ci.raw_lower < 0.0;
    ci.lower = ci.truncated_at_zero ? 0.0 : ci.raw_lower;
    ci.upper = s2 + margin;
    ci.level = 1.0 - alpha;
    ci.point = s2;
    ci.target = Target::Variance;
    ci.method = Method::General;
    return ci;
}

ConfidenceInterval ci_mean_gaussian(const Sample& s, double alpha, const Accuracy& acc) {
    return ci_mean_gaussian(summarize(s), alpha, acc);
}
ConfidenceInterval ci_mean_general(const Sample& s, double alpha, const Accuracy& acc) {
    return ci_mean_general(summarize(s), alpha, acc);
}
ConfidenceInterval ci_var_gaussian(const Sample& s, double alpha, const Accuracy& acc) {
    return ci_var_gaussian(summarize(s), alpha, acc);
}
ConfidenceInterval ci_var_general(const Sample& s, double alpha, const Accuracy& acc) {
    return ci_var_general(summarize(s), alpha, acc);
}

Sample paired_reduce(const Sample& x, const Sample& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("paired_reduce: samples must have equal length");
    if (x.size() < 2)
        throw std::invalid_argument("paired_reduce: needs at least 2 pairs");
    std::vector<double> diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        diff[i] = x.values()[i] - y.values()[i];
    std::string label;
    if (!x.label().empty() || !y.label().empty())
        label = x.label() + "-" + y.label();
    return Sample(std::move(diff), std::move(label));
}

}  // namespace fepstat
