#include "fepstat/sample_io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <string_view>
#include <vector>

#include "fepstat/datasets.hpp"
#include "fepstat/errors.hpp"

namespace fepstat {
namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    throw data_format_error(name + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

Sample parse_sample(std::istream& in, const std::string& name) {
    std::vector<double> values;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view sv(raw);
        const auto first = sv.find_first_not_of(" \t\r,");
        if (first == std::string_view::npos)
            continue;
        if (sv[first] == '#')
            continue;

        std::size_t pos = first;
        while (pos < sv.size()) {
            // Skip separators (whitespace and commas are interchangeable).
            if (sv[pos] == ' ' || sv[pos] == '\t' || sv[pos] == '\r' || sv[pos] == ',') {
                ++pos;
                continue;
            }
            const std::size_t end = sv.find_first_of(" \t\r,", pos);
            const std::string_view tok =
                sv.substr(pos, end == std::string_view::npos ? sv.size() - pos : end - pos);
            double v = 0.0;
            const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                fail(name, line, "unparsable value '" + std::string(tok) + "'");
            if (!std::isfinite(v))
                fail(name, line, "non-finite value '" + std::string(tok) + "'");
            values.push_back(v);
            if (end == std::string_view::npos)
                break;
            pos = end;
        }
    }
    if (values.empty())
        throw data_format_error(name + ": no values found");
    return Sample(std::move(values), name);
}

Sample load_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw data_format_error(path + ": cannot open file");
    return parse_sample(in, path);
}

Sample load_sample(const std::string& path_or_name) {
    std::error_code ec;
    if (std::filesystem::exists(path_or_name, ec))
        return load_sample_file(path_or_name);
    if (is_dataset(path_or_name))
        return dataset(path_or_name);
    throw data_format_error(path_or_name + ": no such file or bundled dataset (bundled: " +
                            [] {
                                std::string s;
                                for (const auto& n : dataset_names())
                                    s += s.empty() ? n : ", " + n;
                                return s;
                            }() + ")");
}

}  // namespace fepstat
