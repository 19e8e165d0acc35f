#pragma once

#include <cstdint>

#include "fepstat/accuracy.hpp"

namespace fepstat {

/// The four reference families needed by the interval procedures.
enum class DistKind : std::uint8_t { Normal, StudentT, ChiSquare, FisherF };

/// Immutable distribution descriptor.  Construct through the static
/// factories, which validate parameters and throw std::domain_error on
/// nonsense (non-positive or non-finite degrees of freedom).
class Distribution {
public:
    static Distribution normal();
    static Distribution student_t(double df);
    static Distribution chi_square(double df);
    static Distribution fisher_f(double df1, double df2);

    [[nodiscard]] DistKind kind() const noexcept { return kind_; }
    [[nodiscard]] double df1() const noexcept { return df1_; }
    [[nodiscard]] double df2() const noexcept { return df2_; }

private:
    Distribution(DistKind kind, double df1, double df2)
        : kind_(kind), df1_(df1), df2_(df2) {}

    DistKind kind_;
    double df1_;
    double df2_;
};

/// Cumulative distribution function.  Pure; throws std::domain_error on
/// NaN.  Negative x for the nonnegative families (chi-square, F) maps
/// to 0 rather than erroring.
double cdf(const Distribution& d, double x, const Accuracy& acc = {});

/// Quantile function: the unique q with cdf(d, q) == p for p in (0, 1).
/// Computed by monotone inversion of the cdf (bracketed Newton with a
/// bisection safeguard), so cdf(d, quantile(d, p)) round-trips to within
/// a small multiple of acc.abs_tol.  Throws std::domain_error for p
/// outside (0, 1).
double quantile(const Distribution& d, double p, const Accuracy& acc = {});

}  // namespace fepstat
