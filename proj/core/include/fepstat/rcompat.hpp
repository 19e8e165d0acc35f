#pragma once

#include "fepstat/accuracy.hpp"
#include "fepstat/interval.hpp"
#include "fepstat/moments.hpp"

namespace fepstat::rcompat {

/// Bug-for-bug reproductions of a legacy R analysis script, selectable via
/// the CLI --compat-rcode switch so its historical output can be compared
/// line by line.  Do not use these for new analyses.

/// The script inverts the general variance bound: it subtracts the whole
/// lower endpoint from the point estimate instead of the margin, yielding
/// [T z/sqrt(n), 2 S^2 - T z/sqrt(n)] where the correct interval is
/// S^2 -+ T z/sqrt(n).  Same applicability conditions as ci_var_general;
/// no zero-clamping (the script never clamped).
ConfidenceInterval ci_var_general(const SampleSummary& s, double alpha, const Accuracy& acc = {});
ConfidenceInterval ci_var_general(const Sample& s, double alpha, const Accuracy& acc = {});

/// The script's "unequal variances" row pairs the Welch standard error
/// sqrt(S1^2/n1 + S2^2/n2) with the pooled t quantile at n1+n2-2 degrees
/// of freedom instead of the Welch-Satterthwaite f.
ConfidenceInterval ci_dm_welch(const SampleSummary& x, const SampleSummary& y,
                               double alpha, const Accuracy& acc = {});
ConfidenceInterval ci_dm_welch(const Sample& x, const Sample& y,
                               double alpha, const Accuracy& acc = {});

}  // namespace fepstat::rcompat
