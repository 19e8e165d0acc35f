#pragma once

#include <cstdint>
#include <string>

namespace fepstat {

/// Which population quantity an interval targets.
enum class Target : std::uint8_t {
    Mean,
    Variance,
    VarianceRatio,
    MeanDifference,
};

/// Which procedure produced an interval.
enum class Method : std::uint8_t {
    GaussianExact,   ///< t / chi-square / F pivots; assumes Gaussian data
    General,         ///< asymptotic z pivots with plug-in normalizers
    GaussianPooled,  ///< two-sample pooled-variance t interval
    GaussianWelch,   ///< two-sample Welch-Satterthwaite t interval
};

[[nodiscard]] std::string to_string(Target t);
[[nodiscard]] std::string to_string(Method m);

/// A two-sided confidence interval plus the context needed to report it.
/// For nonnegative targets (variance, ratio) the lower endpoint is clamped
/// at zero; truncated_at_zero records that this happened and raw_lower
/// keeps the unclamped value for diagnostics.
struct ConfidenceInterval {
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.0;       ///< nominal confidence level, e.g. 0.95
    double point = 0.0;       ///< the point estimate the interval centers on
    Target target = Target::Mean;
    Method method = Method::GaussianExact;
    bool truncated_at_zero = false;
    double raw_lower = 0.0;

    [[nodiscard]] double width() const { return upper - lower; }
    [[nodiscard]] bool contains(double x) const { return lower <= x && x <= upper; }
};

}  // namespace fepstat
