// fepstat command-line tool: one- and two-sample confidence intervals
// (exact Gaussian pivots plus asymptotic "general case" pivots that only
// need finite fourth moments), Jarque-Bera normality testing, normal
// QQ data export, and a seeded Monte-Carlo coverage harness.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "fepstat/errors.hpp"
#include "fepstat/interval.hpp"
#include "fepstat/mc.hpp"
#include "fepstat/moments.hpp"
#include "fepstat/normality.hpp"
#include "fepstat/onesample.hpp"
#include "fepstat/rcompat.hpp"
#include "fepstat/report.hpp"
#include "fepstat/sample_io.hpp"
#include "fepstat/twosample.hpp"

namespace {

// sysexits-style contract: 0 ok, 2 report printed but some methods were
// inapplicable, 64 usage/config error, 65 malformed data.
constexpr int kExitOk = 0;
constexpr int kExitPartial = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

CLI::Validator open_unit_interval() {
    return CLI::Validator(
        [](std::string& s) -> std::string {
            double v = 0.0;
            std::size_t pos = 0;
            try {
                v = std::stod(s, &pos);
            } catch (const std::exception&) {
                return "'" + s + "' is not a number";
            }
            if (pos != s.size())
                return "'" + s + "' is not a number";
            if (!(v > 0.0 && v < 1.0))
                return "value " + s + " is not in the open interval (0, 1)";
            return {};
        },
        "FLOAT in (0,1)");
}

struct DisplayOpts {
    int digits = 2;
    std::string format = "table";

    [[nodiscard]] fepstat::ReportOptions report_options() const {
        return {digits, fepstat::parse_report_format(format)};
    }
};

void add_display_flags(CLI::App* cmd, DisplayOpts& d) {
    cmd->add_option("--digits", d.digits,
                    "significant digits in table output (display only; csv/json always carry full precision)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--format", d.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
}

std::string sig(double x, int digits) { return fepstat::format_sig(x, digits); }

// Runs one interval constructor and appends a report row; an
// inapplicable method becomes a marked row instead of aborting the
// whole report.  Returns false when the method was inapplicable.
bool add_row(fepstat::IntervalReport& rep, std::string section, std::string label,
             const std::function<fepstat::ConfidenceInterval()>& make, std::string note = {}) {
    fepstat::ReportRow row{std::move(section), std::move(label), std::nullopt, std::move(note)};
    bool ok = true;
    try {
        row.ci = make();
    } catch (const fepstat::inapplicable_error& e) {
        row.note = e.what();
        ok = false;
    }
    rep.rows.push_back(std::move(row));
    return ok;
}

void emit(const std::string& text) { std::fputs(text.c_str(), stdout); }

int run_one(const std::string& data, double alpha1, double alpha2, bool compat,
            const DisplayOpts& d) {
    const fepstat::Sample s = fepstat::load_sample(data);
    const fepstat::SampleSummary sum = fepstat::summarize(s);

    fepstat::IntervalReport rep;
    rep.title = "One-sample confidence intervals";
    rep.context = {
        {"sample", s.label()},
        {"n", std::to_string(sum.n)},
        {"mean", sig(sum.mean, d.digits)},
        {"variance S^2", sum.s2 ? sig(*sum.s2, d.digits) : std::string("undefined")},
        {"alpha1 (means; general-case variance)", sig(alpha1, d.digits)},
        {"alpha2 (Gaussian-case variance)", sig(alpha2, d.digits)},
    };

    const std::string mean_sec = "Confidence interval of the mean";
    const std::string var_sec = "Confidence interval of the variance";
    bool all = true;
    all &= add_row(rep, mean_sec, "Gaussian data",
                   [&] { return fepstat::ci_mean_gaussian(sum, alpha1); });
    all &= add_row(rep, mean_sec, "General case",
                   [&] { return fepstat::ci_mean_general(sum, alpha1); });
    all &= add_row(rep, var_sec, "Gaussian data",
                   [&] { return fepstat::ci_var_gaussian(sum, alpha2); });
    all &= add_row(rep, var_sec, "General case",
                   [&] {
                       return compat ? fepstat::rcompat::ci_var_general(sum, alpha1)
                                     : fepstat::ci_var_general(sum, alpha1);
                   },
                   compat ? "legacy-script bound arithmetic" : "");

    emit(render(rep, d.report_options()));
    return all ? kExitOk : kExitPartial;
}

int run_two(const std::string& data1, const std::string& data2, double alpha1, double alpha2,
            fepstat::RatioNormalization mode, bool compat, const DisplayOpts& d) {
    const fepstat::Sample x = fepstat::load_sample(data1);
    const fepstat::Sample y = fepstat::load_sample(data2);
    const fepstat::SampleSummary sx = fepstat::summarize(x);
    const fepstat::SampleSummary sy = fepstat::summarize(y);

    const double big = static_cast<double>(std::max(sx.n, sy.n));
    const double small = static_cast<double>(std::min(sx.n, sy.n));
    if (big / small > 5.0)
        std::fprintf(stderr,
                     "fepstat: warning: sample sizes are strongly imbalanced "
                     "(n1 = %zu, n2 = %zu); the general-case intervals assume "
                     "the sizes grow at comparable rates\n",
                     sx.n, sy.n);

    std::string welch_note;
    std::string welch_ctx = "undefined";
    try {
        const double f = fepstat::welch_df(sx, sy);
        welch_ctx = fepstat::format_full(f);
        welch_note = "f = " + sig(f, std::max(d.digits, 4));
    } catch (const fepstat::inapplicable_error&) {
    }

    fepstat::IntervalReport rep;
    rep.title = "Two-sample confidence intervals";
    rep.context = {
        {"sample 1", x.label() + "  (n = " + std::to_string(sx.n) + ", mean = " + sig(sx.mean, d.digits) +
                         ", S^2 = " + (sx.s2 ? sig(*sx.s2, d.digits) : std::string("undefined")) + ")"},
        {"sample 2", y.label() + "  (n = " + std::to_string(sy.n) + ", mean = " + sig(sy.mean, d.digits) +
                         ", S^2 = " + (sy.s2 ? sig(*sy.s2, d.digits) : std::string("undefined")) + ")"},
        {"ratio normalization", to_string(mode)},
        {"Welch degrees of freedom", welch_ctx},
        {"alpha1 (mean differences; general-case ratio)", sig(alpha1, d.digits)},
        {"alpha2 (Gaussian-case ratio)", sig(alpha2, d.digits)},
    };

    const std::string ratio_sec = "Confidence interval of the variance ratio";
    const std::string dm_sec = "Confidence interval of the mean difference";
    bool all = true;
    all &= add_row(rep, ratio_sec, "Gaussian data",
                   [&] { return fepstat::ci_ratio_gaussian(sx, sy, alpha2); });
    all &= add_row(rep, ratio_sec, "General case",
                   [&] {
                       fepstat::ConfidenceInterval ci =
                           fepstat::ci_ratio_general(sx, sy, alpha1, mode);
                       if (compat && ci.truncated_at_zero) {
                           ci.lower = ci.raw_lower;
                           ci.truncated_at_zero = false;
                       }
                       return ci;
                   },
                   compat ? "lower bound left unclamped" : "");
    all &= add_row(rep, dm_sec, "Pooled (equal variances)",
                   [&] { return fepstat::ci_dm_pooled(sx, sy, alpha1); });
    all &= add_row(rep, dm_sec, "Welch (unequal variances)",
                   [&] {
                       return compat ? fepstat::rcompat::ci_dm_welch(sx, sy, alpha1)
                                     : fepstat::ci_dm_welch(sx, sy, alpha1);
                   },
                   compat ? "legacy-script t quantile at n1+n2-2 df" : welch_note);
    all &= add_row(rep, dm_sec, "General case",
                   [&] { return fepstat::ci_dm_general(sx, sy, alpha1); });

    emit(render(rep, d.report_options()));
    return all ? kExitOk : kExitPartial;
}

int run_jb(const std::string& data, double threshold, const DisplayOpts& d) {
    const fepstat::Sample s = fepstat::load_sample(data);
    const fepstat::JarqueBeraResult r = fepstat::jarque_bera(s);
    emit(render_jb(r, s.label(), threshold, d.report_options()));
    return kExitOk;
}

int run_coverage(const std::string& config_path, std::uint64_t seed,
                 std::optional<std::size_t> reps, unsigned threads,
                 const std::string& out_path, const DisplayOpts& d) {
    fepstat::ScenarioConfig cfg = fepstat::load_scenario_config(config_path);
    if (reps) {
        cfg.replications = *reps;
        cfg.validate();
    }
    const fepstat::CoverageReport rep = fepstat::run_scenario(cfg, seed, threads);

    emit(render_coverage(rep, d.report_options()));
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        f << fepstat::coverage_csv(rep);
        f.flush();
        if (!f) {
            std::fprintf(stderr, "fepstat: error: cannot write '%s'\n", out_path.c_str());
            return 1;
        }
    }
    return kExitOk;
}

int run_qq(const std::string& data, const std::string& out_path) {
    const fepstat::Sample s = fepstat::load_sample(data);
    std::string csv;
    try {
        csv = fepstat::qq_pairs_csv(s);
    } catch (const std::invalid_argument& e) {
        throw fepstat::data_format_error(s.label() + ": " + e.what());
    }
    if (out_path.empty()) {
        emit(csv);
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    f << csv;
    f.flush();
    if (!f) {
        std::fprintf(stderr, "fepstat: error: cannot write '%s'\n", out_path.c_str());
        return 1;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Confidence intervals for one and two samples: exact intervals for "
        "Gaussian data (Student/chi-square/Fisher pivots) side by side with "
        "asymptotic general-case intervals that only assume finite fourth "
        "moments, plus Jarque-Bera normality testing and a seeded "
        "Monte-Carlo coverage harness.",
        "fepstat"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "fepstat 0.1.0");

    const CLI::Validator in_unit = open_unit_interval();

    // --- one ---------------------------------------------------------
    auto* one = app.add_subcommand(
        "one", "Mean and variance intervals for a single sample (file or bundled dataset)");
    std::string one_data;
    double one_a1 = 0.05, one_a2 = 0.1;
    bool one_compat = false;
    DisplayOpts one_d;
    one->add_option("data", one_data, "sample file path or bundled dataset name")->required();
    one->add_option("--alpha-mean", one_a1,
                    "significance level for the mean intervals and the general-case variance interval")
        ->check(in_unit)
        ->capture_default_str();
    one->add_option("--alpha-var", one_a2,
                    "significance level for the Gaussian-case variance interval")
        ->check(in_unit)
        ->capture_default_str();
    one->add_flag("--compat-rcode", one_compat,
                  "reproduce the legacy analysis script's general-case variance bounds");
    add_display_flags(one, one_d);

    // --- two ---------------------------------------------------------
    auto* two = app.add_subcommand(
        "two", "Variance-ratio and mean-difference intervals for two independent samples");
    std::string two_data1, two_data2;
    double two_a1 = 0.05, two_a2 = 0.1;
    std::string two_mode = "theorem";
    bool two_compat = false;
    DisplayOpts two_d;
    two->add_option("data1", two_data1, "first sample (file path or bundled dataset name)")->required();
    two->add_option("data2", two_data2, "second sample (file path or bundled dataset name)")->required();
    two->add_option("--alpha-mean", two_a1,
                    "significance level for the mean-difference intervals and the general-case ratio interval")
        ->check(in_unit)
        ->capture_default_str();
    two->add_option("--alpha-var", two_a2,
                    "significance level for the Gaussian-case (F pivot) ratio interval")
        ->check(in_unit)
        ->capture_default_str();
    two->add_option("--ratio-mode", two_mode,
                    "normalizer scaling for the general-case ratio interval")
        ->check(CLI::IsMember({"theorem", "table-unscaled"}))
        ->capture_default_str();
    two->add_flag("--compat-rcode", two_compat,
                  "reproduce the legacy analysis script: unclamped ratio lower bound and "
                  "pooled-df t quantile in the unequal-variance row");
    add_display_flags(two, two_d);

    // --- jb ----------------------------------------------------------
    auto* jb = app.add_subcommand("jb", "Jarque-Bera normality test");
    std::string jb_data;
    double jb_threshold = 0.05;
    DisplayOpts jb_d;
    jb->add_option("data", jb_data, "sample file path or bundled dataset name")->required();
    jb->add_option("--threshold", jb_threshold, "acceptance threshold for the p-value")
        ->check(in_unit)
        ->capture_default_str();
    add_display_flags(jb, jb_d);

    // --- coverage ----------------------------------------------------
    auto* cov = app.add_subcommand(
        "coverage", "Monte-Carlo coverage experiment driven by a scenario config file");
    std::string cov_config;
    std::uint64_t cov_seed = 42;
    std::optional<std::size_t> cov_reps;
    unsigned cov_threads = 0;
    std::string cov_out;
    DisplayOpts cov_d;
    cov->add_option("config", cov_config, "scenario config file (key=value lines)")->required();
    cov->add_option("--seed", cov_seed, "RNG seed; the report echoes it for reproduction")
        ->capture_default_str();
    cov->add_option("--reps", cov_reps, "override the config's replication count")
        ->check(CLI::PositiveNumber);
    cov->add_option("--threads", cov_threads, "worker threads (0 = hardware default)")
        ->capture_default_str();
    cov->add_option("--out", cov_out, "also write the full-precision CSV report to this file");
    add_display_flags(cov, cov_d);

    // --- qq ----------------------------------------------------------
    auto* qq = app.add_subcommand(
        "qq", "Emit (standard-normal quantile, ordered sample value) pairs as CSV");
    std::string qq_data, qq_out;
    qq->add_option("data", qq_data, "sample file path or bundled dataset name")->required();
    qq->add_option("--out", qq_out, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (one->parsed())
            return run_one(one_data, one_a1, one_a2, one_compat, one_d);
        if (two->parsed())
            return run_two(two_data1, two_data2, two_a1, two_a2,
                           two_mode == "theorem" ? fepstat::RatioNormalization::TheoremScaled
                                                 : fepstat::RatioNormalization::TableUnscaled,
                           two_compat, two_d);
        if (jb->parsed())
            return run_jb(jb_data, jb_threshold, jb_d);
        if (cov->parsed())
            return run_coverage(cov_config, cov_seed, cov_reps, cov_threads, cov_out, cov_d);
        if (qq->parsed())
            return run_qq(qq_data, qq_out);
    } catch (const fepstat::config_error& e) {
        std::fprintf(stderr, "fepstat: config error: %s\n", e.what());
        return kExitUsage;
    } catch (const fepstat::data_format_error& e) {
        std::fprintf(stderr, "fepstat: data error: %s\n", e.what());
        return kExitData;
    } catch (const fepstat::inapplicable_error& e) {
        std::fprintf(stderr, "fepstat: %s\n", e.what());
        return kExitPartial;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "fepstat: error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "fepstat: error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fepstat: internal error: %s\n", e.what());
        return 1;
    }
    return kExitUsage;
}
