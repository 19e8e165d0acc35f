#pragma once

#include <iosfwd>
#include <string>

#include "fepstat/moments.hpp"

namespace fepstat {

/// Parses a plain-text sample: one or more real numbers per line,
/// separated by commas and/or whitespace; blank lines and lines starting
/// with '#' are ignored; '.' is the decimal point and there are no
/// thousands separators.  Throws data_format_error (message prefixed
/// "name:line:") on an unparsable token, a non-finite literal
/// (nan/inf), or when no values remain.
Sample parse_sample(std::istream& in, const std::string& name);

/// parse_sample on the named file; also a data_format_error if the file
/// cannot be opened.
Sample load_sample_file(const std::string& path);

/// Resolves a CLI data argument: an existing file wins; otherwise a
/// bundled dataset name (dakar1, dakar2, diour1, diour2); otherwise a
/// data_format_error listing both failures.
Sample load_sample(const std::string& path_or_name);

}  // namespace fepstat
