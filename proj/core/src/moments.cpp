#include "fepstat/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fepstat {

Sample::Sample(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty())
        throw std::invalid_argument("Sample: must contain at least one value");
    for (const double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("Sample: all values must be finite");
}

double central_moment(const Sample& s, int k) {
    if (k < 1)
        throw std::invalid_argument("central_moment: order must be >= 1");
    const auto& v = s.values();
    double mean = 0.0;
    for (const double x : v)
        mean += x;
    mean /= static_cast<double>(v.size());
    double acc = 0.0;
    for (const double x : v)
        acc += std::pow(x - mean, k);
    return acc / static_cast<double>(v.size());
}

SampleSummary summarize(const Sample& s) {
    return summarize(std::span<const double>(s.values()));
}

SampleSummary summarize(std::span<const double> v) {
    if (v.empty())
        throw std::invalid_argument("summarize: empty sample");
    const double n = static_cast<double>(v.size());

    SampleSummary out;
    out.n = v.size();

    double mean = 0.0;
    for (const double x : v)
        mean += x;
    mean /= n;
    out.mean = mean;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (const double x : v) {
        const double d = x - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    out.m2 = m2;
    out.mu4 = m4;

    if (v.size() >= 2) {
        const double s2 = m2 * n / (n - 1.0);
        out.s2 = s2;
        out.t2 = m4 - s2 * s2;
        if (m2 > 0.0) {
            out.skewness = m3 / std::pow(m2, 1.5);
            out.kurtosis = m4 / (m2 * m2);
        }
    }
    return out;
}

}  // namespace fepstat
