#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fepstat {

/// An observed sample: a nonempty vector of finite doubles.  Construction
/// validates; downstream code may therefore assume the invariants.
class Sample {
public:
    explicit Sample(std::vector<double> values, std::string label = {});

    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const std::string& label() const noexcept { return label_; }

private:
    std::vector<double> values_;
    std::string label_;
};

/// Moment summary of one sample.  Quantities that need a minimum sample
/// size (or nonzero spread) are optional and absent when undefined:
///   - s2 (unbiased variance, divisor n-1) needs n >= 2;
///   - t2 = mu4 - s2^2 (spread of the squared deviations, pairing the
///     divisor-n fourth moment with the unbiased variance) needs n >= 2;
///   - skewness and kurtosis (both built from divisor-n moments) need
///     n >= 2 and a strictly positive divisor-n variance.
struct SampleSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;  ///< divisor-n second central moment
    double mu4 = 0.0; ///< divisor-n fourth central moment
    std::optional<double> s2;
    std::optional<double> t2;
    std::optional<double> skewness;
    std::optional<double> kurtosis;
};

/// k-th central moment with divisor n (k >= 1).
double central_moment(const Sample& s, int k);

/// One pass over the sample computing every summary quantity.
SampleSummary summarize(const Sample& s);

/// Raw-buffer overload for hot simulation loops; the caller guarantees
/// the values are finite (a Sample guarantees this by construction).
/// Throws std::invalid_argument on an empty span.
SampleSummary summarize(std::span<const double> values);

}  // namespace fepstat
