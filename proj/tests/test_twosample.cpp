#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fepstat/errors.hpp"
#include "fepstat/onesample.hpp"
#include "fepstat/rcompat.hpp"
#include "fepstat/twosample.hpp"
#include "testutil.hpp"

using namespace fepstat;

namespace {
const Sample kX({1.0, 2.0, 3.0, 4.0, 5.0});
const Sample kY({2.0, 4.0, 6.0, 8.0, 10.0});
constexpr double kZ975 = 1.959963984540054;
}  // namespace

TEST_CASE("pooled variance") {
    CHECK(std::fabs(pooled_s2(Sample({1.0, 2.0, 3.0}), Sample({10.0, 14.0})) - 10.0 / 3.0) <
          1e-14);
    // Equal samples: pooled equals the common variance.
    CHECK(std::fabs(pooled_s2(kX, kX) - 2.5) < 1e-14);
    // Equal sizes: arithmetic mean of the two variances.
    CHECK(std::fabs(pooled_s2(kX, kY) - 0.5 * (2.5 + 10.0)) < 1e-13);
    CHECK_THROWS_AS(pooled_s2(Sample({1.0}), Sample({2.0})), inapplicable_error);
}

TEST_CASE("Welch-Satterthwaite degrees of freedom") {
    // (S1^2/n1 + S2^2/n2)^2 / ((0.5)^2/4 + (2)^2/4) = 6.25/1.0625 = 100/17.
    CHECK(std::fabs(welch_df(kX, kY) - 100.0 / 17.0) < 1e-12);
    // Symmetric case: f = 2(n-1).
    CHECK(std::fabs(welch_df(kX, Sample({2.0, 3.0, 4.0, 5.0, 6.0})) - 8.0) < 1e-12);
    CHECK_THROWS_AS(welch_df(kX, Sample({3.0, 3.0, 3.0})), inapplicable_error);
}

TEST_CASE("variance-ratio interval from the F pivot") {
    const auto ci = ci_ratio_gaussian(kX, kY, 0.05);
    CHECK(std::fabs(ci.point - 0.25) < 1e-15);
    CHECK(std::fabs(ci.lower - 0.026029384363481917) < 1e-11);
    CHECK(std::fabs(ci.upper - 2.401132471180715) < 1e-9);
    CHECK(ci.target == Target::VarianceRatio);

    // Same sample twice: point estimate 1, interval straddles 1.
    const auto same = ci_ratio_gaussian(kX, kX, 0.1);
    CHECK(same.point == 1.0);
    CHECK(same.lower < 1.0);
    CHECK(same.upper > 1.0);

    // Swapping the samples reciprocates and reverses the endpoints.
    const auto swapped = ci_ratio_gaussian(kY, kX, 0.05);
    CHECK(std::fabs(ci.lower * swapped.upper - 1.0) < 1e-9);
    CHECK(std::fabs(ci.upper * swapped.lower - 1.0) < 1e-9);
}

TEST_CASE("variance-ratio interval from the asymptotic pivot, unscaled mode") {
    // With the raw per-sample fourth-moment statistics: t2 = 0.55 for x,
    // 16 * 0.55 = 8.8 for y = 2x, so the margin is z * sqrt((5*8.8 + 5*0.55)/25).
    const double margin = kZ975 * std::sqrt((5.0 * 8.8 + 5.0 * 0.55) / 25.0);
    const auto ci = ci_ratio_general(kX, kY, 0.05, RatioNormalization::TableUnscaled);
    CHECK(std::fabs(ci.point - 0.25) < 1e-15);
    CHECK(ci.truncated_at_zero);
    CHECK(ci.lower == 0.0);
    CHECK(std::fabs(ci.raw_lower - (0.25 - margin)) < 1e-12);
    CHECK(std::fabs(ci.upper - (0.25 + margin)) < 1e-12);
}

TEST_CASE("variance-ratio interval from the asymptotic pivot, theorem mode") {
    // T1^2 = t2x / s2y^2, T2^2 = s2x^2 t2y / s2y^4 — the scaling that
    // standardizes the ratio estimator.
    const double t1sq = 0.55 / 100.0;
    const double t2sq = 6.25 * 8.8 / 10000.0;
    const double margin = kZ975 * std::sqrt((5.0 * t2sq + 5.0 * t1sq) / 25.0);
    const auto ci = ci_ratio_general(kX, kY, 0.05, RatioNormalization::TheoremScaled);
    CHECK(std::fabs(ci.lower - (0.25 - margin)) < 1e-12);
    CHECK(std::fabs(ci.upper - (0.25 + margin)) < 1e-12);
    CHECK_FALSE(ci.truncated_at_zero);

    // x = y: point estimate 1, interval contains 1.
    const Sample w({0.0, 0.0, 1.0, 1.0, 2.0, 2.0});
    const auto same = ci_ratio_general(w, w, 0.05);
    CHECK(same.point == 1.0);
    CHECK(same.lower < 1.0);
    CHECK(same.upper > 1.0);
}

TEST_CASE("normalizers: b_hat matches the Welch standard error") {
    const auto nz = two_sample_normalizers(summarize(kX), summarize(kY));
    CHECK(std::fabs(1.0 / (nz.b_hat * nz.b_hat) - (2.5 / 5.0 + 10.0 / 5.0)) < 1e-13);
    CHECK(std::fabs(nz.welch_f - 100.0 / 17.0) < 1e-12);
    CHECK(nz.a_hat > 0.0);
}

TEST_CASE("mean-difference intervals on hand-checked inputs") {
    const auto pooled = ci_dm_pooled(Sample({1.0, 2.0, 3.0}), Sample({10.0, 14.0}), 0.05);
    const double margin3 = std::sqrt(10.0 / 3.0) * 3.182446305284263 * std::sqrt(1.0 / 3.0 + 1.0 / 2.0);
    CHECK(std::fabs(pooled.point + 10.0) < 1e-13);
    CHECK(std::fabs(pooled.lower - (-10.0 - margin3)) < 1e-10);
    CHECK(std::fabs(pooled.upper - (-10.0 + margin3)) < 1e-10);
    CHECK(pooled.target == Target::MeanDifference);

    const auto welch = ci_dm_welch(kX, kY, 0.05);
    const double marginw = 2.458823709699146 * std::sqrt(2.5);  // t at 100/17 df
    CHECK(std::fabs(welch.point + 3.0) < 1e-14);
    CHECK(std::fabs(welch.lower - (-3.0 - marginw)) < 1e-10);
    CHECK(std::fabs(welch.upper - (-3.0 + marginw)) < 1e-10);

    const auto gen = ci_dm_general(kX, kY, 0.05);
    const double marging = kZ975 * std::sqrt(2.5);
    CHECK(std::fabs(gen.lower - (-3.0 - marging)) < 1e-12);
    CHECK(std::fabs(gen.upper - (-3.0 + marging)) < 1e-12);
    CHECK(gen.width() < welch.width());

    // Identical samples: everything centered at zero; the asymptotic
    // width is 2 z / b_hat with b_hat from the common variance.
    const auto zero = ci_dm_general(kX, kX, 0.05);
    CHECK(std::fabs(zero.point) < 1e-15);
    CHECK(std::fabs(zero.lower + zero.upper) < 1e-13);
    CHECK(std::fabs(zero.width() - 2.0 * kZ975 * std::sqrt(2.0 * 2.5 / 5.0)) < 1e-12);
}

TEST_CASE("legacy-script variants differ in the documented way") {
    // Unequal-variance row with the pooled-df t quantile.
    const auto compat = rcompat::ci_dm_welch(kX, kY, 0.05);
    const double margin8 = 2.306004135204166 * std::sqrt(2.5);  // t at 8 df
    CHECK(std::fabs(compat.lower - (-3.0 - margin8)) < 1e-10);
    CHECK(std::fabs(compat.upper - (-3.0 + margin8)) < 1e-10);

    // Inverted general variance bounds: [m, 2 s2 - m] instead of s2 -+ m.
    const Sample w({0.0, 0.0, 1.0, 1.0, 2.0, 2.0});
    const auto straight = ci_var_general(w, 0.05);
    const auto flipped = rcompat::ci_var_general(w, 0.05);
    const double m = straight.upper - straight.point;
    CHECK(std::fabs(flipped.lower - m) < 1e-13);
    CHECK(std::fabs(flipped.upper - (2.0 * 0.8 - m)) < 1e-13);
}

TEST_CASE("two-sample preconditions") {
    const Sample constant({3.0, 3.0, 3.0});
    CHECK_THROWS_AS(ci_ratio_gaussian(kX, constant, 0.05), inapplicable_error);
    CHECK_THROWS_AS(ci_ratio_general(kX, Sample({-1.0, 1.0}), 0.05), inapplicable_error);
    CHECK_THROWS_AS(ci_dm_welch(constant, constant, 0.05), inapplicable_error);
    CHECK_THROWS_AS(ci_dm_general(constant, constant, 0.05), inapplicable_error);
    CHECK_THROWS_AS(ci_dm_pooled(Sample({1.0}), Sample({2.0}), 0.05), inapplicable_error);
    CHECK_THROWS_AS(ci_dm_pooled(kX, kY, 1.2), std::domain_error);
    CHECK_THROWS_AS(ci_ratio_general(kX, kY, 0.0), std::domain_error);
}

TEST_SUITE("properties") {
    TEST_CASE("twosample: antisymmetry, bounds, scale law and width order") {
        auto g = testutil::make_rng(7);
        int exercised = 0;
        while (exercised < 1100) {
            const auto x = testutil::random_sample(g, 2, 40);
            const auto y = testutil::random_sample(g, 2, 40);
            const auto sx = summarize(x);
            const auto sy = summarize(y);
            if (!sx.s2 || !sy.s2 || *sx.s2 <= 0.0 || *sy.s2 <= 0.0)
                continue;
            ++exercised;
            const double alpha = testutil::runif(g, 0.01, 0.4);

            // f stays inside [min(n1,n2)-1, n1+n2-2].
            const double f = welch_df(sx, sy);
            const double n1 = static_cast<double>(sx.n), n2 = static_cast<double>(sy.n);
            REQUIRE(f >= std::min(n1, n2) - 1.0 - 1e-9);
            REQUIRE(f <= n1 + n2 - 2.0 + 1e-9);

            // Swapping the samples flips every mean-difference interval.
            const auto p_xy = ci_dm_pooled(sx, sy, alpha);
            const auto p_yx = ci_dm_pooled(sy, sx, alpha);
            const double scale = 1.0 + std::fabs(p_xy.lower) + std::fabs(p_xy.upper);
            REQUIRE(std::fabs(p_xy.lower + p_yx.upper) <= 1e-9 * scale);
            REQUIRE(std::fabs(p_xy.upper + p_yx.lower) <= 1e-9 * scale);
            const auto w_xy = ci_dm_welch(sx, sy, alpha);
            const auto w_yx = ci_dm_welch(sy, sx, alpha);
            REQUIRE(std::fabs(w_xy.lower + w_yx.upper) <= 1e-9 * scale);
            const auto g_xy = ci_dm_general(sx, sy, alpha);
            const auto g_yx = ci_dm_general(sy, sx, alpha);
            REQUIRE(std::fabs(g_xy.lower + g_yx.upper) <= 1e-9 * scale);

            // The asymptotic interval shares the Welch standard error, so
            // it is strictly narrower (z beats t at finite df).
            REQUIRE(g_xy.width() < w_xy.width());

            // Rescaling the second sample by lambda rescales the ratio
            // interval by 1/lambda^2 (theorem normalization).
            if (sx.t2 && sy.t2 && *sx.t2 > 0.0 && *sy.t2 > 0.0) {
                const double lam = std::exp(testutil::runif(g, -1.5, 1.5));
                auto yv = y.values();
                for (auto& v : yv)
                    v *= lam;
                const auto base =
                    ci_ratio_general(sx, sy, alpha, RatioNormalization::TheoremScaled);
                const auto shrunk = ci_ratio_general(sx, summarize(Sample(yv)), alpha,
                                                     RatioNormalization::TheoremScaled);
                const double il2 = 1.0 / (lam * lam);
                REQUIRE(std::fabs(shrunk.point - base.point * il2) <=
                        1e-9 * (1.0 + base.point * il2));
                REQUIRE(std::fabs(shrunk.raw_lower - base.raw_lower * il2) <=
                        1e-9 * (1.0 + std::fabs(base.raw_lower) * il2));
                REQUIRE(std::fabs(shrunk.upper - base.upper * il2) <=
                        1e-9 * (1.0 + base.upper * il2));
            }

            // Equal sizes and equal variances collapse Welch onto pooled.
            if (sx.n >= 2) {
                auto yv = x.values();
                std::reverse(yv.begin(), yv.end());
                const double c = testutil::runif(g, -20.0, 20.0);
                for (auto& v : yv)
                    v += c;
                const auto sy2 = summarize(Sample(yv));
                const auto pooled = ci_dm_pooled(sx, sy2, alpha);
                const auto welch = ci_dm_welch(sx, sy2, alpha);
                const double sc = 1.0 + std::fabs(pooled.lower) + std::fabs(pooled.upper);
                REQUIRE(std::fabs(pooled.lower - welch.lower) <= 1e-9 * sc);
                REQUIRE(std::fabs(pooled.upper - welch.upper) <= 1e-9 * sc);
                REQUIRE(std::fabs(welch_df(sx, sy2) - (n1 + n1 - 2.0)) <= 1e-7 * (n1 + n1));
            }
        }
    }
}
