#pragma once

#include <stdexcept>
#include <string>

namespace fepstat {

/// A requested method exists but cannot be applied to this input (sample
/// too small, degenerate spread, nonpositive plug-in normalizer).  The
/// CLI reports such rows with an explicit marker and exits with the
/// partial-success code instead of aborting the whole report.
class inapplicable_error : public std::runtime_error {
public:
    explicit inapplicable_error(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

/// Malformed input data (sample files): unparsable token, non-finite
/// value, empty file.  Messages carry "path:line:" prefixes.
class data_format_error : public std::runtime_error {
public:
    explicit data_format_error(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

/// Malformed scenario configuration (unknown key, unknown generator,
/// out-of-domain parameter).  Messages carry line numbers.  Treated as a
/// usage error by the CLI.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

}  // namespace fepstat
