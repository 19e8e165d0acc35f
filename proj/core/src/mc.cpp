#include "fepstat/mc.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <limits>
#include <mutex>
#include <string_view>
#include <thread>

#include "fepstat/datasets.hpp"
#include "fepstat/errors.hpp"
#include "fepstat/onesample.hpp"

namespace fepstat {
namespace {

std::string trim(std::string_view sv) {
    const auto* ws = " \t\r\n";
    const auto b = sv.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = sv.find_last_not_of(ws);
    return std::string(sv.substr(b, e - b + 1));
}

double parse_double(const std::string& tok, int line) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || p != last || !std::isfinite(v))
        throw config_error("config line " + std::to_string(line) + ": not a finite number: '" + tok + "'");
    return v;
}

std::size_t parse_count(const std::string& tok, int line) {
    std::size_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || p != last)
        throw config_error("config line " + std::to_string(line) + ": not a nonnegative integer: '" + tok + "'");
    return v;
}

GeneratorSpec parse_generator(const std::string& value, int line) {
    const auto open = value.find('(');
    const auto close = value.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw config_error("config line " + std::to_string(line) +
                           ": generator must be written name(args), got '" + value + "'");
    const std::string name = trim(value.substr(0, open));
    const std::string args = value.substr(open + 1, close - open - 1);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = args.find(',', start);
        parts.push_back(trim(args.substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }

    GeneratorSpec g;
    if (name == "normal" || name == "lognormal" || name == "gamma") {
        if (parts.size() != 2)
            throw config_error("config line " + std::to_string(line) + ": " + name +
                               " takes exactly 2 parameters");
        g.kind = name == "normal"      ? GeneratorKind::Normal
                 : name == "lognormal" ? GeneratorKind::LogNormal
                                       : GeneratorKind::Gamma;
        g.p1 = parse_double(parts[0], line);
        g.p2 = parse_double(parts[1], line);
    } else if (name == "dataset") {
        if (parts.size() != 1 || parts[0].empty())
            throw config_error("config line " + std::to_string(line) + ": dataset takes exactly 1 name");
        g.kind = GeneratorKind::FixedDataset;
        g.dataset = parts[0];
    } else {
        throw config_error("config line " + std::to_string(line) + ": unknown generator '" + name +
                           "' (expected normal, lognormal, gamma or dataset)");
    }
    return g;
}

Target parse_target(const std::string& value, int line) {
    if (value == "mean") return Target::Mean;
    if (value == "variance") return Target::Variance;
    if (value == "ratio") return Target::VarianceRatio;
    if (value == "dm") return Target::MeanDifference;
    throw config_error("config line " + std::to_string(line) + ": unknown target '" + value +
                       "' (expected mean, variance, ratio or dm)");
}

MethodTag parse_method(const std::string& value, int line) {
    if (value == "gaussian") return MethodTag::Gaussian;
    if (value == "general") return MethodTag::General;
    if (value == "pooled") return MethodTag::Pooled;
    if (value == "welch") return MethodTag::Welch;
    throw config_error("config line " + std::to_string(line) + ": unknown method '" + value +
                       "' (expected gaussian, general, pooled or welch)");
}

std::string format_param(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// One replication's outcome for one method.
struct RepOutcome {
    std::uint8_t applicable = 0;
    std::uint8_t covered = 0;
    double width = 0.0;
};

}  // namespace

double GeneratorSpec::true_mean() const {
    switch (kind) {
        case GeneratorKind::Normal:
            return p1;
        case GeneratorKind::LogNormal:
            return std::exp(p1 + 0.5 * p2 * p2);
        case GeneratorKind::Gamma:
            return p1 * p2;
        case GeneratorKind::FixedDataset:
            break;
    }
    throw std::logic_error("GeneratorSpec::true_mean: no population truth for a fixed dataset");
}

double GeneratorSpec::true_variance() const {
    switch (kind) {
        case GeneratorKind::Normal:
            return p2 * p2;
        case GeneratorKind::LogNormal: {
            const double s2 = p2 * p2;
            return (std::exp(s2) - 1.0) * std::exp(2.0 * p1 + s2);
        }
        case GeneratorKind::Gamma:
            return p1 * p2 * p2;
        case GeneratorKind::FixedDataset:
            break;
    }
    throw std::logic_error("GeneratorSpec::true_variance: no population truth for a fixed dataset");
}

void GeneratorSpec::draw(RngStream& rng, std::size_t n, std::vector<double>& out) const {
    switch (kind) {
        case GeneratorKind::Normal:
            out.resize(n);
            for (auto& v : out)
                v = rng.normal(p1, p2);
            return;
        case GeneratorKind::LogNormal:
            out.resize(n);
            for (auto& v : out)
                v = rng.lognormal(p1, p2);
            return;
        case GeneratorKind::Gamma:
            out.resize(n);
            for (auto& v : out)
                v = rng.gamma(p1, p2);
            return;
        case GeneratorKind::FixedDataset:
            out = dataset_values(dataset);
            return;
    }
    throw std::logic_error("GeneratorSpec::draw: unknown generator kind");
}

std::string GeneratorSpec::describe() const {
    switch (kind) {
        case GeneratorKind::Normal:
            return "normal(" + format_param(p1) + "," + format_param(p2) + ")";
        case GeneratorKind::LogNormal:
            return "lognormal(" + format_param(p1) + "," + format_param(p2) + ")";
        case GeneratorKind::Gamma:
            return "gamma(" + format_param(p1) + "," + format_param(p2) + ")";
        case GeneratorKind::FixedDataset:
            return "dataset(" + dataset + ")";
    }
    return "?";
}

std::string to_string(MethodTag m) {
    switch (m) {
        case MethodTag::Gaussian: return "gaussian";
        case MethodTag::General: return "general";
        case MethodTag::Pooled: return "pooled";
        case MethodTag::Welch: return "welch";
    }
    return "?";
}

void ScenarioConfig::validate() const {
    if (replications < 1)
        throw config_error("config: replications must be >= 1");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw config_error("config: alpha must lie strictly in (0, 1)");
    if (n1 < 1)
        throw config_error("config: n1 must be >= 1");
    if (n2 && *n2 < 1)
        throw config_error("config: n2 must be >= 1");

    auto check_gen = [](const GeneratorSpec& g, const char* which) {
        switch (g.kind) {
            case GeneratorKind::Normal:
            case GeneratorKind::LogNormal:
                if (!(g.p2 > 0.0))
                    throw config_error(std::string("config: ") + which + ": sigma must be > 0");
                break;
            case GeneratorKind::Gamma:
                if (!(g.p1 > 0.0) || !(g.p2 > 0.0))
                    throw config_error(std::string("config: ") + which +
                                       ": shape and scale must be > 0");
                break;
            case GeneratorKind::FixedDataset:
                if (!is_dataset(g.dataset))
                    throw config_error(std::string("config: ") + which + ": unknown dataset '" +
                                       g.dataset + "'");
                break;
        }
    };
    check_gen(gen1, "generator");
    if (gen2)
        check_gen(*gen2, "generator2");

    if (two_sample() && !n2)
        throw config_error("config: two-sample targets (ratio, dm) require n2");
    if (!two_sample() && gen2)
        throw config_error("config: generator2 given for a one-sample target");
    if (!two_sample() && n2)
        throw config_error("config: n2 given for a one-sample target");

    for (const MethodTag m : methods) {
        if ((m == MethodTag::Pooled || m == MethodTag::Welch) && target != Target::MeanDifference)
            throw config_error("config: method '" + to_string(m) + "' applies only to target dm");
    }
}

std::vector<MethodTag> ScenarioConfig::resolved_methods() const {
    if (!methods.empty())
        return methods;
    if (target == Target::MeanDifference)
        return {MethodTag::Pooled, MethodTag::Welch, MethodTag::General};
    return {MethodTag::Gaussian, MethodTag::General};
}

ScenarioConfig parse_scenario_config(std::istream& in) {
    ScenarioConfig cfg;
    std::vector<std::string> seen;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string stripped = trim(raw);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(line) + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error("config line " + std::to_string(line) + ": empty key or value");
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw config_error("config line " + std::to_string(line) + ": duplicate key '" + key + "'");
        seen.push_back(key);

        if (key == "name") {
            cfg.name = value;
        } else if (key == "generator") {
            cfg.gen1 = parse_generator(value, line);
        } else if (key == "generator2") {
            cfg.gen2 = parse_generator(value, line);
        } else if (key == "n1") {
            cfg.n1 = parse_count(value, line);
        } else if (key == "n2") {
            cfg.n2 = parse_count(value, line);
        } else if (key == "alpha") {
            cfg.alpha = parse_double(value, line);
        } else if (key == "replications") {
            cfg.replications = parse_count(value, line);
        } else if (key == "target") {
            cfg.target = parse_target(value, line);
        } else if (key == "methods") {
            std::size_t start = 0;
            while (true) {
                const auto comma = value.find(',', start);
                const std::string tok = trim(value.substr(start, comma - start));
                if (!tok.empty())
                    cfg.methods.push_back(parse_method(tok, line));
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }
            if (cfg.methods.empty())
                throw config_error("config line " + std::to_string(line) + ": empty methods list");
        } else if (key == "ratio_mode") {
            if (value == "theorem")
                cfg.ratio_mode = RatioNormalization::TheoremScaled;
            else if (value == "table-unscaled")
                cfg.ratio_mode = RatioNormalization::TableUnscaled;
            else
                throw config_error("config line " + std::to_string(line) + ": unknown ratio_mode '" +
                                   value + "' (expected theorem or table-unscaled)");
        } else {
            throw config_error("config line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("config: cannot open '" + path + "'");
    return parse_scenario_config(in);
}

CoverageReport run_scenario(const ScenarioConfig& cfg, std::uint64_t seed, unsigned threads) {
    cfg.validate();
    const std::vector<MethodTag> methods = cfg.resolved_methods();
    const std::size_t reps = cfg.replications;
    const std::size_t n_methods = methods.size();

    const GeneratorSpec gen2 = cfg.gen2 ? *cfg.gen2 : cfg.gen1;
    const bool two = cfg.two_sample();

    std::optional<double> truth;
    const bool have_truth =
        cfg.gen1.has_true_moments() && (!two || gen2.has_true_moments());
    if (have_truth) {
        switch (cfg.target) {
            case Target::Mean:
                truth = cfg.gen1.true_mean();
                break;
            case Target::Variance:
                truth = cfg.gen1.true_variance();
                break;
            case Target::VarianceRatio:
                truth = cfg.gen1.true_variance() / gen2.true_variance();
                break;
            case Target::MeanDifference:
                truth = cfg.gen1.true_mean() - gen2.true_mean();
                break;
        }
    }

    // One slot per (method, replication); workers write disjoint slices
    // and the reduction below runs in fixed index order, which is what
    // makes the report independent of the thread count.
    std::vector<RepOutcome> slots(n_methods * reps);

    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto run_range = [&](std::size_t lo, std::size_t hi) {
        try {
            std::vector<double> buf1;
            std::vector<double> buf2;
            for (std::size_t r = lo; r < hi; ++r) {
                RngStream rng(seed, r);
                cfg.gen1.draw(rng, cfg.n1, buf1);
                const SampleSummary s1 = summarize(buf1);
                SampleSummary s2;
                if (two) {
                    gen2.draw(rng, *cfg.n2, buf2);
                    s2 = summarize(buf2);
                }
                for (std::size_t m = 0; m < n_methods; ++m) {
                    RepOutcome& slot = slots[m * reps + r];
                    try {
                        ConfidenceInterval ci;
                        switch (cfg.target) {
                            case Target::Mean:
                                ci = methods[m] == MethodTag::Gaussian
                                         ? ci_mean_gaussian(s1, cfg.alpha)
                                         : ci_mean_general(s1, cfg.alpha);
                                break;
                            case Target::Variance:
                                ci = methods[m] == MethodTag::Gaussian
                                         ? ci_var_gaussian(s1, cfg.alpha)
                                         : ci_var_general(s1, cfg.alpha);
                                break;
                            case Target::VarianceRatio:
                                ci = methods[m] == MethodTag::Gaussian
                                         ? ci_ratio_gaussian(s1, s2, cfg.alpha)
                                         : ci_ratio_general(s1, s2, cfg.alpha, cfg.ratio_mode);
                                break;
                            case Target::MeanDifference:
                                ci = methods[m] == MethodTag::Pooled ? ci_dm_pooled(s1, s2, cfg.alpha)
                                     : methods[m] == MethodTag::Welch
                                         ? ci_dm_welch(s1, s2, cfg.alpha)
                                         : ci_dm_general(s1, s2, cfg.alpha);
                                break;
                        }
                        slot.applicable = 1;
                        slot.covered = truth && ci.contains(*truth) ? 1 : 0;
                        slot.width = ci.width();
                    } catch (const inapplicable_error&) {
                        slot.applicable = 0;
                    }
                }
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error)
                first_error = std::current_exception();
        }
    };

    unsigned n_threads = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (n_threads == 0)
        n_threads = 1;
    n_threads = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, reps));

    if (n_threads <= 1) {
        run_range(0, reps);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        const std::size_t chunk = (reps + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            const std::size_t lo = static_cast<std::size_t>(t) * chunk;
            const std::size_t hi = std::min(reps, lo + chunk);
            if (lo >= hi)
                break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);

    CoverageReport report;
    report.config = cfg;
    report.seed = seed;
    report.true_value = truth;
    report.methods.reserve(n_methods);
    for (std::size_t m = 0; m < n_methods; ++m) {
        MethodReport mr;
        mr.method = methods[m];
        std::size_t covered = 0;
        double width_sum = 0.0;
        for (std::size_t r = 0; r < reps; ++r) {
            const RepOutcome& slot = slots[m * reps + r];
            if (!slot.applicable)
                continue;
            ++mr.applicable;
            covered += slot.covered;
            width_sum += slot.width;
        }
        mr.failures = reps - mr.applicable;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        mr.coverage = (truth && mr.applicable > 0)
                          ? static_cast<double>(covered) / static_cast<double>(mr.applicable)
                          : nan;
        if (mr.applicable > 0) {
            mr.mean_width = width_sum / static_cast<double>(mr.applicable);
            double ss = 0.0;
            for (std::size_t r = 0; r < reps; ++r) {
                const RepOutcome& slot = slots[m * reps + r];
                if (!slot.applicable)
                    continue;
                const double d = slot.width - mr.mean_width;
                ss += d * d;
            }
            mr.width_std = mr.applicable > 1
                               ? std::sqrt(ss / static_cast<double>(mr.applicable - 1))
                               : 0.0;
        } else {
            mr.mean_width = nan;
            mr.width_std = nan;
        }
        report.methods.push_back(mr);
    }
    return report;
}

}  // namespace fepstat
