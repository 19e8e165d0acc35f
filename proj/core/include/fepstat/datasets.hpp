#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fepstat/moments.hpp"

namespace fepstat {

/// Metadata for one bundled dataset.  `sum` is the checked-in checksum
/// of the values (left-to-right accumulation); the regression tests
/// compare it against the embedded array so silent edits are caught.
struct DatasetInfo {
    std::string name;
    std::size_t n = 0;
    double sum = 0.0;
    std::string note;  ///< provenance / transcription notes
};

/// Names of the bundled household-income samples (dakar1, dakar2,
/// diour1, diour2; 50 observations each).  Mirrored as plain-text
/// fixtures under data/.
const std::vector<std::string>& dataset_names();

bool is_dataset(const std::string& name);

/// The raw values; throws std::invalid_argument for an unknown name.
const std::vector<double>& dataset_values(const std::string& name);

/// The values wrapped as a labeled Sample.
Sample dataset(const std::string& name);

DatasetInfo dataset_info(const std::string& name);

}  // namespace fepstat
