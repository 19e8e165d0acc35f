#include "fepstat/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fepstat {
namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id) {
    std::seed_seq seq{seed, stream_id};
    return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : eng_(make_engine(seed, stream_id)) {}

std::uint64_t RngStream::next_u64() {
    return eng_();
}

double RngStream::uniform() {
    // Top 53 bits, centered on the bit lattice: never exactly 0 or 1.
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal(double m, double sigma) {
    if (!(sigma > 0.0))
        throw std::domain_error("RngStream::normal: sigma must be > 0");
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return m + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::lognormal(double mu, double sigma) {
    if (!(sigma > 0.0))
        throw std::domain_error("RngStream::lognormal: sigma must be > 0");
    return std::exp(normal(mu, sigma));
}

double RngStream::gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::domain_error("RngStream::gamma: shape and scale must be > 0");
    if (shape < 1.0) {
        // Boost: G(shape) = G(shape+1) * U^(1/shape).
        const double u = uniform();
        return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal(0.0, 1.0);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2)
            return d * v * scale;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
            return d * v * scale;
    }
}

}  // namespace fepstat
