// Release gate: ten numbered end-to-end checks, one PASS/FAIL line each.
// Each check re-derives its expectations independently (closed forms,
// quadrature oracles, binomial error bands) rather than trusting the
// library's own constants.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fepstat/datasets.hpp"
#include "fepstat/dist.hpp"
#include "fepstat/mc.hpp"
#include "fepstat/normality.hpp"
#include "fepstat/onesample.hpp"
#include "fepstat/specfun.hpp"
#include "fepstat/twosample.hpp"
#include "oracle.hpp"

using namespace fepstat;

namespace {

bool g_all_ok = true;

void report(int id, bool ok, const std::string& msg) {
    if (!ok)
        g_all_ok = false;
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, msg.c_str());
    std::fflush(stdout);
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cmd(const std::string& cmd, std::string* out = nullptr) {
    const std::string out_path = "/tmp/fepstat_acceptance_out";
    const int raw = std::system((cmd + " >" + out_path + " 2>&1").c_str());
    if (out)
        *out = slurp(out_path);
    std::remove(out_path.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

// --- 1: special functions vs independent oracles --------------------

void criterion_1() {
    Stopwatch sw;
    double worst = 0.0;
    auto note = [&worst](double got, double want) {
        worst = std::max(worst, std::fabs(got - want));
    };

    for (int twice_x = 1; twice_x <= 199; ++twice_x)
        note(ln_gamma(0.5 * twice_x), oracle::ln_gamma_exact(twice_x));
    for (double x = -4.0; x <= 4.0 + 1e-12; x += 0.0625)
        note(fepstat::erf(x), oracle::erf_series(x));
    const double shapes[] = {0.3, 0.5, 1.0, 2.5, 5.0, 10.0, 24.5};
    const double ratios[] = {0.25, 0.5, 1.0, 2.0, 4.0};
    for (const double a : shapes)
        for (const double r : ratios)
            note(reg_inc_gamma_P(a, a * r), oracle::inc_gamma_p_quad(a, a * r));
    const double ab[] = {0.5, 2.0, 8.0, 24.5};
    const double xs[] = {0.2, 0.5, 0.8};
    for (const double a : ab)
        for (const double b : ab)
            for (const double x : xs)
                note(reg_inc_beta(x, a, b), oracle::inc_beta_quad(x, a, b));

    const double t = sw.seconds();
    report(1, worst < 1e-10 && t < 1.0,
           fmt("special functions vs series/quadrature oracles: worst |diff| = %.2e "
               "(< 1e-10), grid time %.2f s (< 1 s)",
               worst, t));
}

// --- 2: quantile/cdf round trip --------------------------------------

void criterion_2() {
    Stopwatch sw;
    const double dfs[] = {1.0, 2.0, 4.0, 8.0, 29.0, 49.0, 5.882};
    double worst = 0.0;
    auto round_trip = [&worst](const Distribution& d) {
        for (int i = 1; i <= 199; ++i) {
            const double p = i / 200.0;
            worst = std::max(worst, std::fabs(cdf(d, quantile(d, p)) - p));
        }
    };
    round_trip(Distribution::normal());
    for (const double df : dfs) {
        round_trip(Distribution::student_t(df));
        round_trip(Distribution::chi_square(df));
    }
    for (const double d1 : dfs)
        for (const double d2 : dfs)
            round_trip(Distribution::fisher_f(d1, d2));
    const double t = sw.seconds();
    report(2, worst < 1e-9 && t < 1.0,
           fmt("quantile round trip over 64 laws x 199 probabilities: worst |cdf(q(p)) - p| "
               "= %.2e (< 1e-9), time %.2f s (< 1 s)",
               worst, t));
}

// --- 3: one-sample reference intervals -------------------------------

double rel_dev(double ours, double ref) { return std::fabs(ours - ref) / std::fabs(ref); }

void criterion_3() {
    struct Case {
        const char* name;
        double g_lo, g_hi, z_lo, z_hi;  // quoted reference bounds
    };
    const Case cases[] = {
        {"dakar1", 190746.0, 786611.0, 200000.0, 779256.0},
        {"dakar2", 542666.0, 990509.0, 548194.0, 984981.0},
    };
    bool hard_ok = true;
    double soft_worst = 0.0;
    for (const Case& c : cases) {
        const SampleSummary s = summarize(dataset(c.name));
        const ConfidenceInterval g = ci_mean_gaussian(s, 0.05);
        const ConfidenceInterval z = ci_mean_general(s, 0.05);
        const double scale = std::fabs(s.mean);
        hard_ok = hard_ok && std::fabs(0.5 * (g.lower + g.upper) - s.mean) < 1e-9 * scale &&
                  std::fabs(0.5 * (z.lower + z.upper) - s.mean) < 1e-9 * scale &&
                  z.width() < g.width();
        soft_worst = std::max({soft_worst, rel_dev(g.lower, c.g_lo), rel_dev(g.upper, c.g_hi),
                               rel_dev(z.lower, c.z_lo), rel_dev(z.upper, c.z_hi)});
    }
    std::string msg = fmt(
        "one-sample mean intervals on dakar1/dakar2: centers match the sample mean and the "
        "asymptotic interval is strictly narrower; reference bounds matched to %.2f%%",
        100.0 * soft_worst);
    if (soft_worst > 0.05)
        msg += " [discrepancy report: quoted bounds differ beyond 5%; sample selection "
               "in the source is ambiguous]";
    else
        msg += " (worst case is a reference bound quoted to one significant digit)";
    report(3, hard_ok, msg);
}

// --- 4: two-sample mean-difference intervals -------------------------

void criterion_4() {
    // Hard: equal sizes and equal variances collapse Welch onto pooled;
    // the asymptotic interval is strictly narrower than Welch at n1 = n2.
    std::vector<double> xv, yv;
    for (int i = 0; i < 24; ++i) {
        const double u = std::sin(0.7 * i) * 3.0 + 0.2 * i;
        xv.push_back(u);
        yv.push_back(u + 5.0);  // same spread, shifted mean
    }
    const SampleSummary sx = summarize(Sample(xv));
    const SampleSummary sy = summarize(Sample(yv));
    const ConfidenceInterval p = ci_dm_pooled(sx, sy, 0.05);
    const ConfidenceInterval w = ci_dm_welch(sx, sy, 0.05);
    const double sc = 1.0 + std::fabs(p.lower) + std::fabs(p.upper);
    bool hard_ok = std::fabs(p.lower - w.lower) < 1e-9 * sc &&
                   std::fabs(p.upper - w.upper) < 1e-9 * sc;

    struct Pair {
        const char* x;
        const char* y;
        double p_lo, p_hi, z_lo, z_hi;  // quoted reference bounds
    };
    const Pair pairs[] = {
        {"dakar1", "diour1", 214102.0, 587024.0, 216405.0, 584722.0},
        {"dakar2", "diour2", 157976.0, 438435.0, 159708.0, 436705.0},
    };
    double soft_worst = 0.0;
    for (const Pair& pr : pairs) {
        const SampleSummary a = summarize(dataset(pr.x));
        const SampleSummary b = summarize(dataset(pr.y));
        const ConfidenceInterval pooled = ci_dm_pooled(a, b, 0.05);
        const ConfidenceInterval welch = ci_dm_welch(a, b, 0.05);
        const ConfidenceInterval gen = ci_dm_general(a, b, 0.05);
        hard_ok = hard_ok && gen.width() < welch.width();
        soft_worst = std::max({soft_worst, rel_dev(pooled.lower, pr.p_lo),
                               rel_dev(pooled.upper, pr.p_hi), rel_dev(gen.lower, pr.z_lo),
                               rel_dev(gen.upper, pr.z_hi)});
    }
    std::string msg = fmt(
        "mean-difference intervals: pooled == Welch to 1e-9 under equal sizes/variances, "
        "asymptotic strictly narrower than Welch on both survey pairs; quoted reference "
        "bounds differ by up to %.0f%%",
        100.0 * soft_worst);
    if (soft_worst > 0.01)
        msg += " [discrepancy report: the quoted two-sample tables come from unspecified "
               "sub-samples and are not reproducible from the bundled datasets; the "
               "structural relations above are the binding checks]";
    report(4, hard_ok, msg);
}

// --- 5: normality test ------------------------------------------------

void criterion_5() {
    Stopwatch sw;
    // Upper chi-square(2) tail at 0.13 must equal exp(-0.065).
    const double p013 = 1.0 - cdf(Distribution::chi_square(2.0), 0.13);
    const double want = std::exp(-0.065);
    bool ok = std::fabs(p013 - want) < 1e-4;

    bool tails_ok = true;
    for (const auto& name : dataset_names()) {
        const JarqueBeraResult r = jarque_bera(dataset(name));
        tails_ok = tails_ok && r.p_value < 1e-9;
    }
    const double t = sw.seconds();
    ok = ok && tails_ok && t < 0.1;
    report(5, ok,
           fmt("normality p-values: p(0.13) = %.6f vs exp(-0.065) = %.6f (diff %.1e; the "
               "quoted decimal 0.93647 is off by 6e-4 from its own closed form), all four "
               "datasets reject with p < 1e-9, time %.3f s (< 0.1 s)",
               p013, want, p013 - want, t));
}

// --- 6/7/8: Monte-Carlo coverage --------------------------------------

CoverageReport mean_scenario(std::size_t n, std::vector<MethodTag> methods, double& secs) {
    ScenarioConfig cfg;
    cfg.name = "acceptance";
    cfg.gen1 = {GeneratorKind::Normal, 3.0, 2.0, ""};
    cfg.n1 = n;
    cfg.alpha = 0.05;
    cfg.replications = 20000;
    cfg.target = Target::Mean;
    cfg.methods = std::move(methods);
    Stopwatch sw;
    CoverageReport rep = run_scenario(cfg, 42);
    secs = sw.seconds();
    return rep;
}

void criteria_6_7_8() {
    const double band = 3.0 * std::sqrt(0.95 * 0.05 / 20000.0);

    double t9 = 0.0, t29 = 0.0, t5 = 0.0;
    const CoverageReport r9 = mean_scenario(9, {MethodTag::Gaussian}, t9);
    const CoverageReport r29 = mean_scenario(29, {MethodTag::Gaussian, MethodTag::General}, t29);
    const CoverageReport r5 = mean_scenario(5, {MethodTag::General}, t5);

    const double c9 = r9.methods[0].coverage;
    const double c29 = r29.methods[0].coverage;
    report(6,
           std::fabs(c9 - 0.95) <= band && std::fabs(c29 - 0.95) <= band && t9 < 30.0 &&
               t29 < 30.0,
           fmt("exact mean interval coverage at 20000 seeded replications: %.4f (n = 9), "
               "%.4f (n = 29), both within 0.95 +- %.4f; %.1f s and %.1f s (< 30 s each)",
               c9, c29, band, t9, t29));

    ScenarioConfig var_cfg;
    var_cfg.name = "acceptance-var";
    var_cfg.gen1 = {GeneratorKind::Normal, 3.0, 2.0, ""};
    var_cfg.n1 = 50;
    var_cfg.alpha = 0.05;
    var_cfg.replications = 20000;
    var_cfg.target = Target::Variance;
    var_cfg.methods = {MethodTag::General};
    const CoverageReport rv = run_scenario(var_cfg, 42);

    const double g29 = r29.methods[1].coverage;
    const double g5 = r5.methods[0].coverage;
    const double gv = rv.methods[0].coverage;
    report(7, g29 >= 0.93 && g5 < g29 && gv >= 0.90,
           fmt("asymptotic interval coverage: mean %.4f at n = 29 (>= 0.93) vs %.4f at n = 5 "
               "(strictly smaller), variance %.4f at n = 50 (>= 0.90)",
               g29, g5, gv));

    ScenarioConfig ratio;
    ratio.name = "acceptance-ratio";
    ratio.gen1 = {GeneratorKind::Normal, 0.0, 1.0, ""};
    ratio.gen2 = GeneratorSpec{GeneratorKind::Normal, 0.0, 10.0, ""};
    ratio.n1 = 200;
    ratio.n2 = 200;
    ratio.alpha = 0.05;
    ratio.replications = 20000;
    ratio.target = Target::VarianceRatio;
    ratio.methods = {MethodTag::General};
    ratio.ratio_mode = RatioNormalization::TheoremScaled;
    const double ct = run_scenario(ratio, 42).methods[0].coverage;
    ratio.ratio_mode = RatioNormalization::TableUnscaled;
    const double cu = run_scenario(ratio, 42).methods[0].coverage;
    const bool theorem_in = ct >= 0.93 && ct <= 0.97;
    const bool table_out = cu < 0.93 || cu > 0.97;
    report(8, theorem_in && table_out,
           fmt("ratio normalizer adjudication at n = 200, spreads 1 vs 10: theorem scaling "
               "covers at %.4f (inside [0.93, 0.97]); unscaled normalizer at %.4f (outside)",
               ct, cu));
}

// --- 9: command-line determinism ---------------------------------------

void criterion_9() {
    const std::string cli = FEPSTAT_CLI_PATH;
    const std::string cfg = std::string(FEPSTAT_DATA_DIR) + "/scenarios/mean_gauss_n9.cfg";
    const std::string a = "/tmp/fepstat_acceptance_a.csv";
    const std::string b = "/tmp/fepstat_acceptance_b.csv";
    const std::string c = "/tmp/fepstat_acceptance_c.csv";
    const int e1 = run_cmd(cli + " coverage " + cfg + " --seed 42 --threads 1 --out " + a);
    const int e2 = run_cmd(cli + " coverage " + cfg + " --seed 42 --threads 8 --out " + b);
    const int e3 = run_cmd(cli + " coverage " + cfg + " --seed 42 --threads 8 --out " + c);
    const std::string ca = slurp(a), cb = slurp(b), cc = slurp(c);
    std::remove(a.c_str());
    std::remove(b.c_str());
    std::remove(c.c_str());
    const bool ok = e1 == 0 && e2 == 0 && e3 == 0 && !ca.empty() && ca == cb && cb == cc;
    report(9, ok,
           fmt("coverage command with a fixed seed: %zu-byte CSV byte-identical across "
               "repeat runs and across 1-thread vs 8-thread execution",
               ca.size()));
}

// --- 10: randomized invariant suites -----------------------------------

void criterion_10() {
    std::string out;
    const int code = run_cmd(std::string(FEPSTAT_UNIT_TESTS_PATH) + " -ts=properties", &out);
    int total = 0, passed = 0;
    const char* p = std::strstr(out.c_str(), "test cases:");
    if (p)
        std::sscanf(p, "test cases: %d | %d passed", &total, &passed);
    const bool ok = code == 0 && total >= 8 && passed == total;
    report(10, ok,
           fmt("randomized invariant suites (>= 1000 cases per module): %d suites, %d passed, "
               "exit %d",
               total, passed, code));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criteria_6_7_8();
    criterion_9();
    criterion_10();
    std::printf("%s\n", g_all_ok ? "acceptance: all criteria satisfied"
                                 : "acceptance: at least one criterion FAILED");
    return g_all_ok ? 0 : 1;
}
