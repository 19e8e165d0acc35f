#include "fepstat/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fepstat/specfun.hpp"

namespace fepstat {
namespace {

void check_df(double df, const char* what) {
    if (!(df > 0.0) || !std::isfinite(df))
        throw std::domain_error(std::string(what) + ": degrees of freedom must be finite and > 0");
}

void check_prob(double p, const char* what) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error(std::string(what) + ": p must lie strictly in (0, 1)");
}

double normal_cdf(double x, const Accuracy& acc) {
    // Phi(x) = (1 + erf(x / sqrt(2))) / 2, split to preserve tail accuracy.
    const double z = x / std::numbers::sqrt2;
    if (x >= 0.0)
        return 0.5 * (1.0 + erf(z, acc));
    return 0.5 * reg_inc_gamma_Q(0.5, z * z, acc);
}

double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double student_t_cdf(double df, double x, const Accuracy& acc) {
    if (x == 0.0)
        return 0.5;
    const double ib = reg_inc_beta(df / (df + x * x), 0.5 * df, 0.5, acc);
    return x > 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
}

double student_t_pdf(double df, double x) {
    const double ln =
        ln_gamma(0.5 * (df + 1.0)) - ln_gamma(0.5 * df) -
        0.5 * std::log(df * std::numbers::pi) -
        0.5 * (df + 1.0) * std::log1p(x * x / df);
    return std::exp(ln);
}

double chi_square_cdf(double df, double x, const Accuracy& acc) {
    return reg_inc_gamma_P(0.5 * df, 0.5 * x, acc);
}

double chi_square_pdf(double df, double x) {
    if (x == 0.0)
        return df == 2.0 ? 0.5 : (df > 2.0 ? 0.0 : std::numeric_limits<double>::infinity());
    const double h = 0.5 * df;
    return std::exp((h - 1.0) * std::log(x) - 0.5 * x - h * std::numbers::ln2 - ln_gamma(h));
}

double fisher_f_cdf(double df1, double df2, double x, const Accuracy& acc) {
    if (x == 0.0)
        return 0.0;
    return reg_inc_beta(df1 * x / (df1 * x + df2), 0.5 * df1, 0.5 * df2, acc);
}

double fisher_f_pdf(double df1, double df2, double x) {
    if (x == 0.0)
        return df1 == 2.0 ? 1.0 : (df1 > 2.0 ? 0.0 : std::numeric_limits<double>::infinity());
    const double h1 = 0.5 * df1;
    const double h2 = 0.5 * df2;
    const double ln = h1 * std::log(df1 / df2) + (h1 - 1.0) * std::log(x) -
                      (h1 + h2) * std::log1p(df1 * x / df2) +
                      ln_gamma(h1 + h2) - ln_gamma(h1) - ln_gamma(h2);
    return std::exp(ln);
}

bool support_is_nonnegative(DistKind kind) {
    return kind == DistKind::ChiSquare || kind == DistKind::FisherF;
}

// A crude but robust starting point for the inversion: the normal quantile
// via the Beasley-Springer-Moro style rational fit would do, but a plain
// logistic-ish guess suffices since Newton is safeguarded by the bracket.
double initial_guess(const Distribution& d, double p) {
    // Rough normal quantile (Bowling's logistic approximation).
    const double z = -std::log(1.0 / p - 1.0) / 1.702;
    switch (d.kind()) {
        case DistKind::Normal:
            return z;
        case DistKind::StudentT:
            return z;
        case DistKind::ChiSquare: {
            // Wilson-Hilferty.
            const double k = d.df1();
            const double c = 1.0 - 2.0 / (9.0 * k);
            const double w = c + z * std::sqrt(2.0 / (9.0 * k));
            return w > 0.0 ? k * w * w * w : 0.5 * k * std::exp(z);
        }
        case DistKind::FisherF:
            return std::exp(0.5 * z);
    }
    return z;
}

}  // namespace

Distribution Distribution::normal() {
    return Distribution(DistKind::Normal, 0.0, 0.0);
}

Distribution Distribution::student_t(double df) {
    check_df(df, "student_t");
    return Distribution(DistKind::StudentT, df, 0.0);
}

Distribution Distribution::chi_square(double df) {
    check_df(df, "chi_square");
    return Distribution(DistKind::ChiSquare, df, 0.0);
}

Distribution Distribution::fisher_f(double df1, double df2) {
    check_df(df1, "fisher_f(df1)");
    check_df(df2, "fisher_f(df2)");
    return Distribution(DistKind::FisherF, df1, df2);
}

namespace {

// Densities are needed only to speed up the quantile Newton steps; they
// are deliberately not part of the public surface.
double density(const Distribution& d, double x) {
    switch (d.kind()) {
        case DistKind::Normal:
            return normal_pdf(x);
        case DistKind::StudentT:
            return student_t_pdf(d.df1(), x);
        case DistKind::ChiSquare:
            return chi_square_pdf(d.df1(), x);
        case DistKind::FisherF:
            return fisher_f_pdf(d.df1(), d.df2(), x);
    }
    throw std::logic_error("density: unknown distribution kind");
}

}  // namespace

double cdf(const Distribution& d, double x, const Accuracy& acc) {
    if (std::isnan(x))
        throw std::domain_error("cdf: NaN input");
    if (support_is_nonnegative(d.kind()) && x < 0.0)
        return 0.0;
    if (std::isinf(x))
        return x > 0.0 ? 1.0 : 0.0;
    switch (d.kind()) {
        case DistKind::Normal:
            return normal_cdf(x, acc);
        case DistKind::StudentT:
            return student_t_cdf(d.df1(), x, acc);
        case DistKind::ChiSquare:
            return chi_square_cdf(d.df1(), x, acc);
        case DistKind::FisherF:
            return fisher_f_cdf(d.df1(), d.df2(), x, acc);
    }
    throw std::logic_error("cdf: unknown distribution kind");
}

double quantile(const Distribution& d, double p, const Accuracy& acc) {
    if (!acc.valid())
        throw std::domain_error("Accuracy: abs_tol must be > 0 and max_iter >= 1");
    check_prob(p, "quantile");

    const bool nonneg = support_is_nonnegative(d.kind());

    // Bracket [lo, hi] with cdf(lo) <= p <= cdf(hi), grown geometrically.
    double lo;
    double hi;
    double guess = initial_guess(d, p);
    if (nonneg)
        guess = std::max(guess, 1e-8);
    if (cdf(d, guess, acc) >= p) {
        hi = guess;
        lo = nonneg ? 0.0 : guess - 1.0;
        if (!nonneg) {
            double step = 1.0;
            while (cdf(d, lo, acc) > p) {
                step *= 2.0;
                lo -= step;
                if (!std::isfinite(lo))
                    throw std::runtime_error("quantile: failed to bracket from below");
            }
        }
    } else {
        lo = guess;
        hi = nonneg ? std::max(2.0 * guess, 1.0) : guess + 1.0;
        double step = hi - lo;
        while (cdf(d, hi, acc) < p) {
            step *= 2.0;
            hi += step;
            if (!std::isfinite(hi))
                throw std::runtime_error("quantile: failed to bracket from above");
        }
    }

    // Newton iterations confined to the bracket; fall back to bisection
    // whenever the Newton step leaves it or the density underflows.  Once
    // the cdf residual is inside tolerance, one last guarded Newton step
    // polishes the root to near machine accuracy.
    double x = std::clamp(guess, lo, hi);
    const double tol = std::min(acc.abs_tol, 1e-12);
    for (std::size_t it = 0; it < acc.max_iter; ++it) {
        const double f = cdf(d, x, acc) - p;
        const double dens = density(d, x);
        if (std::fabs(f) <= tol) {
            if (dens > 0.0) {
                const double polished = x - f / dens;
                if (polished > lo && polished < hi)
                    return polished;
            }
            return x;
        }
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        double next = x - f / dens;
        if (!(dens > 0.0) || !(next > lo) || !(next < hi))
            next = 0.5 * (lo + hi);
        if (next == x)  // bracket exhausted at double precision
            return x;
        x = next;
    }
    // Bisection alone may need more halvings than the nominal budget on
    // extreme tails; finish it rather than failing.
    for (int it = 0; it < 2048 && lo < hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (cdf(d, mid, acc) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace fepstat
