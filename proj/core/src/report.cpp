#include "fepstat/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "json.hpp"

#include "fepstat/dist.hpp"

namespace fepstat {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_num(double x) {
    return std::isnan(x) ? std::string() : format_full(x);
}

// Pads cells into aligned columns; `right` marks right-justified columns.
std::string align_table(const std::vector<std::vector<std::string>>& rows,
                        const std::vector<bool>& right, int indent) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size())
            width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line(static_cast<std::size_t>(indent), ' ');
        for (std::size_t c = 0; c < row.size(); ++c) {
            const bool rj = c < right.size() && right[c];
            const std::size_t pad = width[c] - row[c].size();
            if (rj)
                line.append(pad, ' ');
            line += row[c];
            if (c + 1 < row.size()) {
                if (!rj)
                    line.append(pad, ' ');
                line += "  ";
            }
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

// Marker tokens shared by every rendering of a row.
std::string row_marker(const ReportRow& row) {
    std::string note;
    if (!row.ci)
        note = "[inapplicable]";
    else if (row.ci->truncated_at_zero)
        note = "[truncated-at-zero]";
    if (!row.note.empty()) {
        if (!note.empty())
            note += ' ';
        note += row.note;
    }
    return note;
}

std::string interval_csv(const IntervalReport& rep) {
    std::string out =
        "section,label,target,method,status,level,point,lower,upper,"
        "truncated_at_zero,raw_lower,note\n";
    for (const auto& row : rep.rows) {
        out += csv_escape(row.section) + ',' + csv_escape(row.label) + ',';
        if (row.ci) {
            out += to_string(row.ci->target) + ',' + to_string(row.ci->method) + ",ok,";
            out += format_full(row.ci->level) + ',' + format_full(row.ci->point) + ',';
            out += format_full(row.ci->lower) + ',' + format_full(row.ci->upper) + ',';
            out += row.ci->truncated_at_zero ? "true," : "false,";
            out += format_full(row.ci->raw_lower) + ',';
        } else {
            out += ",,inapplicable,,,,,,,";
        }
        out += csv_escape(row.note);
        out += '\n';
    }
    return out;
}

std::string interval_json(const IntervalReport& rep) {
    ordered_json j;
    j["title"] = rep.title;
    ordered_json ctx;
    for (const auto& [k, v] : rep.context)
        ctx[k] = v;
    j["context"] = ctx;
    j["rows"] = ordered_json::array();
    for (const auto& row : rep.rows) {
        ordered_json r;
        r["section"] = row.section;
        r["label"] = row.label;
        if (row.ci) {
            r["status"] = "ok";
            r["target"] = to_string(row.ci->target);
            r["method"] = to_string(row.ci->method);
            r["level"] = row.ci->level;
            r["point"] = row.ci->point;
            r["lower"] = row.ci->lower;
            r["upper"] = row.ci->upper;
            r["truncated_at_zero"] = row.ci->truncated_at_zero;
            r["raw_lower"] = row.ci->raw_lower;
        } else {
            r["status"] = "inapplicable";
        }
        r["note"] = row.note;
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

std::string interval_table(const IntervalReport& rep, const ReportOptions& opts) {
    std::string out = rep.title + "\n";
    for (const auto& [k, v] : rep.context)
        out += "  " + k + ": " + v + "\n";

    std::string section;
    std::vector<std::vector<std::string>> cells;
    const std::vector<bool> right = {false, true, true, false};
    auto flush = [&] {
        if (cells.empty())
            return;
        out += align_table(cells, right, 2);
        cells.clear();
    };
    for (const auto& row : rep.rows) {
        if (row.section != section) {
            flush();
            section = row.section;
            out += "\n" + section + "\n";
            cells.push_back({"", "inferior bound", "superior bound", ""});
        }
        std::vector<std::string> line(4);
        line[0] = row.label;
        if (row.ci) {
            line[1] = format_sig(row.ci->lower, opts.digits);
            line[2] = format_sig(row.ci->upper, opts.digits);
        } else {
            line[1] = "-";
            line[2] = "-";
        }
        line[3] = row_marker(row);
        cells.push_back(std::move(line));
    }
    flush();
    return out;
}

std::string method_label(MethodTag m) {
    switch (m) {
        case MethodTag::Gaussian: return "gaussian";
        case MethodTag::General: return "general";
        case MethodTag::Pooled: return "pooled";
        case MethodTag::Welch: return "welch";
    }
    return "?";
}

std::string target_key(Target t) {
    switch (t) {
        case Target::Mean: return "mean";
        case Target::Variance: return "variance";
        case Target::VarianceRatio: return "ratio";
        case Target::MeanDifference: return "dm";
    }
    return "?";
}

}  // namespace

std::string to_string(Target t) {
    switch (t) {
        case Target::Mean: return "mean";
        case Target::Variance: return "variance";
        case Target::VarianceRatio: return "variance-ratio";
        case Target::MeanDifference: return "mean-difference";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::GaussianExact: return "gaussian-exact";
        case Method::General: return "general";
        case Method::GaussianPooled: return "pooled";
        case Method::GaussianWelch: return "welch";
    }
    return "?";
}

ReportFormat parse_report_format(const std::string& s) {
    if (s == "table")
        return ReportFormat::Table;
    if (s == "csv")
        return ReportFormat::Csv;
    if (s == "json")
        return ReportFormat::Json;
    throw std::invalid_argument("unknown format '" + s + "' (expected table, csv or json)");
}

std::string format_full(double x) {
    if (std::isnan(x))
        return "nan";
    if (x == 0.0)
        return "0";
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x)
            break;
    }
    return buf;
}

std::string format_sig(double x, int digits) {
    if (x == 0.0)
        return "0";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", std::max(digits, 1), x);
    return buf;
}

std::string render(const IntervalReport& rep, const ReportOptions& opts) {
    switch (opts.format) {
        case ReportFormat::Table:
            return interval_table(rep, opts);
        case ReportFormat::Csv:
            return interval_csv(rep);
        case ReportFormat::Json:
            return interval_json(rep);
    }
    throw std::logic_error("render: unknown format");
}

std::string render_jb(const JarqueBeraResult& r, const std::string& label,
                      double threshold, const ReportOptions& opts) {
    const bool accepted = r.p_value >= threshold;
    if (opts.format == ReportFormat::Csv) {
        std::string out =
            "label,n,skewness,kurtosis,statistic,p_value,threshold,normality_accepted\n";
        out += csv_escape(label) + ',' + std::to_string(r.n) + ',' + format_full(r.skewness) +
               ',' + format_full(r.kurtosis) + ',' + format_full(r.statistic) + ',' +
               format_full(r.p_value) + ',' + format_full(threshold) + ',' +
               (accepted ? "true" : "false") + '\n';
        return out;
    }
    if (opts.format == ReportFormat::Json) {
        ordered_json j;
        j["label"] = label;
        j["n"] = r.n;
        j["skewness"] = r.skewness;
        j["kurtosis"] = r.kurtosis;
        j["statistic"] = r.statistic;
        j["p_value"] = r.p_value;
        j["threshold"] = threshold;
        j["normality_accepted"] = accepted;
        return j.dump(2) + "\n";
    }

    char pct[64];
    std::snprintf(pct, sizeof pct, "%.*f%%", std::max(opts.digits, 1), 100.0 * r.p_value);
    std::string pvalue = pct;
    if (100.0 * r.p_value < 0.5 * std::pow(10.0, -std::max(opts.digits, 1)))
        pvalue += " (" +
                  (r.p_value > 0.0 ? format_sig(r.p_value, 3) : std::string("underflows to 0")) +
                  ")";

    char thr[64];
    std::snprintf(thr, sizeof thr, "%g%%", 100.0 * threshold);
    std::vector<std::vector<std::string>> cells = {
        {"n:", std::to_string(r.n)},
        {"skewness:", format_sig(r.skewness, std::max(opts.digits, 4))},
        {"kurtosis:", format_sig(r.kurtosis, std::max(opts.digits, 4))},
        {"statistic:", format_sig(r.statistic, std::max(opts.digits, 4))},
        {"p-value:", pvalue},
        {"decision:", std::string("normality ") + (accepted ? "accepted" : "rejected") +
                          " at the " + thr + " level"},
    };
    return "Normality check (Jarque-Bera) - " + label + "\n" +
           align_table(cells, {false, false}, 2);
}

std::string render_coverage(const CoverageReport& rep, const ReportOptions& opts) {
    if (opts.format == ReportFormat::Csv)
        return coverage_csv(rep);

    const ScenarioConfig& cfg = rep.config;
    const GeneratorSpec gen2 = cfg.gen2 ? *cfg.gen2 : cfg.gen1;

    if (opts.format == ReportFormat::Json) {
        ordered_json j;
        j["scenario"] = cfg.name;
        j["seed"] = rep.seed;
        j["target"] = target_key(cfg.target);
        j["generator1"] = cfg.gen1.describe();
        if (cfg.two_sample()) {
            j["generator2"] = gen2.describe();
            j["n2"] = *cfg.n2;
        }
        j["n1"] = cfg.n1;
        j["alpha"] = cfg.alpha;
        j["replications"] = cfg.replications;
        j["ratio_mode"] = to_string(cfg.ratio_mode);
        if (rep.true_value)
            j["true_value"] = *rep.true_value;
        else
            j["true_value"] = nullptr;
        j["methods"] = ordered_json::array();
        for (const auto& m : rep.methods) {
            ordered_json mj;
            mj["method"] = method_label(m.method);
            mj["applicable"] = m.applicable;
            mj["failures"] = m.failures;
            mj["coverage"] = m.coverage;  // NaN dumps as null
            mj["mean_width"] = m.mean_width;
            mj["width_std"] = m.width_std;
            j["methods"].push_back(std::move(mj));
        }
        return j.dump(2) + "\n";
    }

    std::string out = "Coverage scenario '" + cfg.name + "'  (seed " + std::to_string(rep.seed) +
                      ")\n";
    out += "  target: " + target_key(cfg.target) + "   generator: " + cfg.gen1.describe();
    if (cfg.two_sample())
        out += " vs " + gen2.describe();
    out += "\n  n1 = " + std::to_string(cfg.n1);
    if (cfg.n2)
        out += "   n2 = " + std::to_string(*cfg.n2);
    out += "   alpha = " + format_sig(cfg.alpha, 6) +
           "   replications = " + std::to_string(cfg.replications);
    if (cfg.target == Target::VarianceRatio)
        out += "   ratio mode = " + to_string(cfg.ratio_mode);
    out += "\n";
    if (rep.true_value)
        out += "  true value: " + format_sig(*rep.true_value, std::max(opts.digits, 6)) + "\n";
    else
        out += "  true value: none (fixed dataset; coverage undefined)\n";

    std::vector<std::vector<std::string>> cells;
    cells.push_back({"method", "applicable", "failures", "coverage", "mean width", "width std"});
    for (const auto& m : rep.methods) {
        char cov[32];
        if (std::isnan(m.coverage))
            std::snprintf(cov, sizeof cov, "n/a");
        else
            std::snprintf(cov, sizeof cov, "%.4f", m.coverage);
        cells.push_back({method_label(m.method), std::to_string(m.applicable),
                         std::to_string(m.failures), cov,
                         format_sig(m.mean_width, std::max(opts.digits, 4)),
                         format_sig(m.width_std, std::max(opts.digits, 4))});
    }
    out += align_table(cells, {false, true, true, true, true, true}, 2);
    return out;
}

std::string coverage_csv(const CoverageReport& rep) {
    const ScenarioConfig& cfg = rep.config;
    const GeneratorSpec gen2 = cfg.gen2 ? *cfg.gen2 : cfg.gen1;
    std::string out =
        "scenario,seed,target,generator1,generator2,n1,n2,alpha,replications,"
        "ratio_mode,method,applicable,failures,coverage,mean_width,width_std,true_value\n";
    for (const auto& m : rep.methods) {
        out += csv_escape(cfg.name) + ',' + std::to_string(rep.seed) + ',' +
               target_key(cfg.target) + ',' + csv_escape(cfg.gen1.describe()) + ',';
        out += cfg.two_sample() ? csv_escape(gen2.describe()) : std::string();
        out += ',' + std::to_string(cfg.n1) + ',';
        out += cfg.n2 ? std::to_string(*cfg.n2) : std::string();
        out += ',' + format_full(cfg.alpha) + ',' + std::to_string(cfg.replications) + ',' +
               to_string(cfg.ratio_mode) + ',' + method_label(m.method) + ',' +
               std::to_string(m.applicable) + ',' + std::to_string(m.failures) + ',' +
               csv_num(m.coverage) + ',' + csv_num(m.mean_width) + ',' + csv_num(m.width_std) +
               ',';
        out += rep.true_value ? format_full(*rep.true_value) : std::string();
        out += '\n';
    }
    return out;
}

std::string qq_pairs_csv(const Sample& s, const Accuracy& acc) {
    if (s.size() < 2)
        throw std::invalid_argument("qq_pairs_csv: needs at least 2 observations");
    std::vector<double> sorted = s.values();
    std::sort(sorted.begin(), sorted.end());
    const auto normal = Distribution::normal();
    const double n = static_cast<double>(sorted.size());
    std::string out = "theoretical,empirical\n";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double p = (static_cast<double>(i) + 0.5) / n;
        out += format_full(quantile(normal, p, acc)) + ',' + format_full(sorted[i]) + '\n';
    }
    return out;
}

}  // namespace fepstat
