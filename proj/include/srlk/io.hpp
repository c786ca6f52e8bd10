#pragma once

#include <string>
#include <vector>

#include "srlk/core.hpp"

namespace srlk {

// Dataset CSV: one point per row, columns are coordinates, no header.
Dataset read_dataset_csv(const std::string& path);
void write_dataset_csv(const std::string& path, const Dataset& X);

// Clustering CSV: two columns point_id,block_index; only in-domain ids are
// listed. n_total sizes the label vector; k <= 0 infers k = max label + 1.
Clustering read_clustering_csv(const std::string& path, int n_total, int k = 0);
// As above with n_total inferred as max point id + 1.
Clustering read_clustering_csv_auto(const std::string& path, int k = 0);
void write_clustering_csv(const std::string& path, const Clustering& c);

// Mapping CSV: matrix rows are output dimensions.
LinearMapping read_mapping_csv(const std::string& path, double bound = 0.0);
void write_mapping_csv(const std::string& path, const LinearMapping& f);

// Round-trip-safe double formatting used by all CSV emitters.
std::string fmt_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace srlk
