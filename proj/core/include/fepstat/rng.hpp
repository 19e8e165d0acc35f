#pragma once

#include <cstdint>
#include <random>

namespace fepstat {

/// A deterministic random stream: identical (seed, stream_id) pairs give
/// identical variate sequences on every run, regardless of what other
/// streams exist.  Simulation code derives one stream per replication
/// (stream_id = replication index), which is what makes results
/// independent of scheduling and thread count.
///
/// The engine is std::mt19937_64 seeded through std::seed_seq, both of
/// which have fully specified, implementation-independent output.  All
/// variate transforms below are fixed explicitly (never delegated to
/// std::*_distribution, whose algorithms vary between standard libraries):
///   uniform:   53-bit mantissa draw, strictly inside (0, 1);
///   normal:    Box-Muller, cosine branch only, two uniforms per draw;
///   gamma:     Marsaglia-Tsang squeeze (shape >= 1), boosted by
///              u^(1/shape) for shape < 1;
///   lognormal: exp of a normal draw.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    /// Raw engine output, 64 uniform bits.
    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1).
    double uniform();

    /// Normal with mean m and standard deviation sigma > 0.
    double normal(double m, double sigma);

    /// exp(N(mu, sigma^2)); log-scale sigma > 0.
    double lognormal(double mu, double sigma);

    /// Gamma with the given shape > 0 and scale > 0.
    double gamma(double shape, double scale);

private:
    std::mt19937_64 eng_;
};

}  // namespace fepstat
