#pragma once

#include <string>

#include "hyperclust/dataset.hpp"

namespace hyperclust {

/// Reads a comma-separated dataset. A header row is recognized when its
/// first field is not numeric; if the header's last field is `label` the
/// last column carries labels, whose arbitrary string values are mapped to
/// 0-based indices in order of first appearance. Unlabeled files are all
/// numeric. Parse problems raise DataError naming the line.
Dataset load_csv(const std::string& path);

/// Writes features (and the label column when present) with a header row,
/// LF line endings and round-trip-exact floats.
void save_csv(const Dataset& dataset, const std::string& path);

}  // namespace hyperclust
