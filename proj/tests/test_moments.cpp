#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fepstat/moments.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using fepstat::Sample;
using fepstat::summarize;

TEST_CASE("sample construction validates contents") {
    CHECK_THROWS_AS(Sample({}), std::invalid_argument);
    CHECK_THROWS_AS(Sample({1.0, std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Sample({1.0, std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
    const Sample s({1.0, 2.0}, "pair");
    CHECK(s.size() == 2);
    CHECK(s.label() == "pair");
}

TEST_CASE("two-point sample: the fourth-moment statistic can be negative") {
    const auto sum = summarize(Sample({-1.0, 1.0}));
    CHECK(sum.mean == 0.0);
    CHECK(sum.s2.has_value());
    CHECK(std::fabs(*sum.s2 - 2.0) < 1e-15);
    CHECK(std::fabs(sum.mu4 - 1.0) < 1e-15);
    CHECK(sum.t2.has_value());
    CHECK(std::fabs(*sum.t2 + 3.0) < 1e-15);
}

TEST_CASE("five-point sample against hand-computed moments") {
    const auto sum = summarize(Sample({1.0, 2.0, 3.0, 4.0, 5.0}));
    CHECK(std::fabs(sum.mean - 3.0) < 1e-15);
    CHECK(std::fabs(*sum.s2 - 2.5) < 1e-15);
    CHECK(std::fabs(sum.m2 - 2.0) < 1e-15);
    CHECK(std::fabs(sum.mu4 - 6.8) < 1e-14);
    CHECK(std::fabs(*sum.t2 - 0.55) < 1e-14);
    CHECK(std::fabs(*sum.skewness) < 1e-15);
    CHECK(std::fabs(*sum.kurtosis - 6.8 / 4.0) < 1e-14);
}

TEST_CASE("degenerate and tiny samples flag undefined statistics") {
    const auto constant = summarize(Sample({7.5, 7.5, 7.5, 7.5}));
    CHECK(constant.mean == 7.5);
    CHECK(constant.s2.has_value());
    CHECK(*constant.s2 == 0.0);
    CHECK_FALSE(constant.skewness.has_value());
    CHECK_FALSE(constant.kurtosis.has_value());

    const auto single = summarize(Sample({42.0}));
    CHECK(single.mean == 42.0);
    CHECK_FALSE(single.s2.has_value());
    CHECK_FALSE(single.t2.has_value());
}

TEST_CASE("central moments: centering, symmetry and hand values") {
    const Sample five({1.0, 2.0, 3.0, 4.0, 5.0});
    CHECK(std::fabs(central_moment(five, 1)) < 1e-15);
    CHECK(std::fabs(central_moment(five, 3)) < 1e-14);
    CHECK(std::fabs(central_moment(Sample({-1.0, 1.0}), 2) - 1.0) < 1e-15);
    CHECK(std::fabs(central_moment(five, 4) - 6.8) < 1e-14);
    CHECK_THROWS_AS(central_moment(five, 0), std::invalid_argument);
}

TEST_CASE("summary matches long-double reference on wide-ranging data") {
    auto g = testutil::make_rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        const auto values = testutil::random_values(g, testutil::rsize(g, 2, 400));
        const auto sum = summarize(Sample(values));
        CHECK(std::fabs(sum.mean - oracle::naive_mean(values)) <=
              1e-12 * (1.0 + std::fabs(sum.mean)));
        CHECK(std::fabs(*sum.s2 - oracle::naive_sample_variance(values)) <=
              1e-9 * (1.0 + std::fabs(*sum.s2)));
        CHECK(std::fabs(sum.mu4 - oracle::naive_central_moment(values, 4)) <=
              1e-9 * (1.0 + std::fabs(sum.mu4)));
        if (sum.skewness) {
            const double m2 = oracle::naive_central_moment(values, 2);
            const double m3 = oracle::naive_central_moment(values, 3);
            const double m4 = oracle::naive_central_moment(values, 4);
            CHECK(std::fabs(*sum.skewness - m3 / std::pow(m2, 1.5)) <=
                  1e-9 * (1.0 + std::fabs(*sum.skewness)));
            CHECK(std::fabs(*sum.kurtosis - m4 / (m2 * m2)) <=
                  1e-9 * (1.0 + std::fabs(*sum.kurtosis)));
        }
    }
}

TEST_CASE("span overload agrees with the validated path") {
    const std::vector<double> v{3.5, -1.25, 8.0, 0.5, 2.0, 2.0};
    const auto a = summarize(Sample(v));
    const auto b = summarize(std::span<const double>(v));
    CHECK(a.mean == b.mean);
    CHECK(*a.s2 == *b.s2);
    CHECK(a.mu4 == b.mu4);
    CHECK(*a.t2 == *b.t2);
    CHECK_THROWS_AS(summarize(std::span<const double>{}), std::invalid_argument);
}

TEST_SUITE("properties") {
    TEST_CASE("moments: location invariance and scale equivariance") {
        auto g = testutil::make_rng(4);
        for (int i = 0; i < 1100; ++i) {
            const auto values = testutil::random_values(g, testutil::rsize(g, 2, 60));
            const auto base = summarize(Sample(values));

            const double c = testutil::runif(g, -100.0, 100.0);
            auto shifted = values;
            for (auto& x : shifted)
                x += c;
            const auto sh = summarize(Sample(shifted));
            REQUIRE(std::fabs(sh.mean - (base.mean + c)) <=
                    1e-9 * (1.0 + std::fabs(base.mean) + std::fabs(c)));
            REQUIRE(std::fabs(*sh.s2 - *base.s2) <= 1e-9 * (1.0 + std::fabs(*base.s2)));
            REQUIRE(std::fabs(sh.mu4 - base.mu4) <= 1e-9 * (1.0 + std::fabs(base.mu4)));
            REQUIRE(std::fabs(*sh.t2 - *base.t2) <=
                    1e-9 * (1.0 + std::fabs(*base.t2) + base.mu4));
            if (base.skewness) {
                REQUIRE(std::fabs(*sh.skewness - *base.skewness) <=
                        1e-7 * (1.0 + std::fabs(*base.skewness)));
                REQUIRE(std::fabs(*sh.kurtosis - *base.kurtosis) <=
                        1e-7 * (1.0 + std::fabs(*base.kurtosis)));
            }

            const double lam = std::exp(testutil::runif(g, -3.0, 3.0));
            auto scaled = values;
            for (auto& x : scaled)
                x *= lam;
            const auto sc = summarize(Sample(scaled));
            REQUIRE(std::fabs(sc.mean - lam * base.mean) <=
                    1e-9 * (1.0 + std::fabs(lam * base.mean)));
            REQUIRE(std::fabs(*sc.s2 - lam * lam * *base.s2) <=
                    1e-9 * (1.0 + lam * lam * std::fabs(*base.s2)));
            REQUIRE(std::fabs(sc.mu4 - std::pow(lam, 4) * base.mu4) <=
                    1e-9 * (1.0 + std::pow(lam, 4) * base.mu4));
            REQUIRE(std::fabs(*sc.t2 - std::pow(lam, 4) * *base.t2) <=
                    1e-9 * (1.0 + std::pow(lam, 4) * (std::fabs(*base.t2) + base.mu4)));
            if (base.skewness) {
                REQUIRE(std::fabs(*sc.skewness - *base.skewness) <=
                        1e-9 * (1.0 + std::fabs(*base.skewness)));
                REQUIRE(std::fabs(*sc.kurtosis - *base.kurtosis) <=
                        1e-9 * (1.0 + std::fabs(*base.kurtosis)));
            }
        }
    }
}
