#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fepstat/interval.hpp"
#include "fepstat/rng.hpp"
#include "fepstat/twosample.hpp"

namespace fepstat {

/// What a scenario draws its samples from.
enum class GeneratorKind : std::uint8_t { Normal, LogNormal, Gamma, FixedDataset };

/// One sampling law with known population moments.  p1/p2 mean:
///   Normal:     p1 = mean, p2 = standard deviation (> 0)
///   LogNormal:  p1 = log-scale mean, p2 = log-scale sigma (> 0)
///   Gamma:      p1 = shape (> 0), p2 = scale (> 0)
///   FixedDataset: `dataset` names a bundled sample; every draw returns
///   it verbatim, so there is no population truth and coverage is
///   undefined for scenarios using it.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Normal;
    double p1 = 0.0;
    double p2 = 1.0;
    std::string dataset;

    [[nodiscard]] bool has_true_moments() const { return kind != GeneratorKind::FixedDataset; }
    [[nodiscard]] double true_mean() const;
    [[nodiscard]] double true_variance() const;
    void draw(RngStream& rng, std::size_t n, std::vector<double>& out) const;
    [[nodiscard]] std::string describe() const;
};

/// Which interval constructors a scenario exercises.  Gaussian means the
/// exact pivot for the target (t, chi-square or F); General the
/// asymptotic z pivot; Pooled/Welch apply to the mean-difference target
/// only.
enum class MethodTag : std::uint8_t { Gaussian, General, Pooled, Welch };

[[nodiscard]] std::string to_string(MethodTag m);

/// A full Monte-Carlo experiment description.  Parsed from a plain-text
/// key=value file (see parse_scenario_config) or built directly.
struct ScenarioConfig {
    std::string name = "scenario";
    GeneratorSpec gen1;
    std::optional<GeneratorSpec> gen2;  ///< second arm; defaults to gen1
    std::size_t n1 = 30;
    std::optional<std::size_t> n2;      ///< absent = one-sample target
    double alpha = 0.05;
    std::size_t replications = 20000;
    Target target = Target::Mean;
    std::vector<MethodTag> methods;     ///< empty = every method for the target
    RatioNormalization ratio_mode = RatioNormalization::TheoremScaled;

    /// Throws config_error on out-of-domain values or a two-sample
    /// target without n2.
    void validate() const;

    /// The methods actually run (resolves the empty-list default).
    [[nodiscard]] std::vector<MethodTag> resolved_methods() const;

    [[nodiscard]] bool two_sample() const {
        return target == Target::VarianceRatio || target == Target::MeanDifference;
    }
};

/// Parses one scenario from "key = value" lines ('#' comments and blank
/// lines ignored).  Keys: name, generator, generator2, n1, n2, alpha,
/// replications, target, methods, ratio_mode.  Generators are written
/// normal(m, sd) | lognormal(mu, sigma) | gamma(shape, scale) |
/// dataset(name).  Throws config_error with a line number on anything
/// unrecognized.
ScenarioConfig parse_scenario_config(std::istream& in);
ScenarioConfig load_scenario_config(const std::string& path);

/// Per-method aggregate over the replications.
struct MethodReport {
    MethodTag method = MethodTag::Gaussian;
    std::size_t applicable = 0;  ///< replications where the CI existed
    std::size_t failures = 0;    ///< replications where it was inapplicable
    double coverage = 0.0;       ///< NaN when no truth or no applicable reps
    double mean_width = 0.0;
    double width_std = 0.0;
};

/// The result of one scenario run: config echo, seed echo, the true
/// target value (absent for dataset generators), per-method aggregates.
struct CoverageReport {
    ScenarioConfig config;
    std::uint64_t seed = 0;
    std::optional<double> true_value;
    std::vector<MethodReport> methods;
};

/// Runs the scenario.  Replication r draws from RngStream(seed, r); the
/// per-replication results are reduced in index order afterwards, so the
/// report is bit-identical for any thread count (threads = 0 picks the
/// hardware concurrency).  Coverage counts only applicable replications.
CoverageReport run_scenario(const ScenarioConfig& cfg, std::uint64_t seed, unsigned threads = 0);

}  // namespace fepstat
