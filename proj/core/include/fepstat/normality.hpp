#pragma once

#include <cstddef>

#include "fepstat/accuracy.hpp"
#include "fepstat/moments.hpp"

namespace fepstat {

/// Jarque-Bera test of the composite Gaussian hypothesis.
struct JarqueBeraResult {
    std::size_t n = 0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    double statistic = 0.0;  ///< n * ((kurtosis-3)^2/24 + skewness^2/6)
    double p_value = 0.0;    ///< upper chi-square(2) tail = exp(-statistic/2)
};

/// Computes the statistic and its asymptotic chi-square(2) p-value.
/// Requires n >= 4 and nonzero sample spread; throws inapplicable_error
/// otherwise (the two moment ratios are meaningless below that).
JarqueBeraResult jarque_bera(const Sample& s, const Accuracy& acc = {});

/// The same test starting from a precomputed summary.
JarqueBeraResult jarque_bera(const SampleSummary& summary, const Accuracy& acc = {});

}  // namespace fepstat
