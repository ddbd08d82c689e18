#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "simphom/complex.hpp"
#include "simphom/hypergraph.hpp"
#include "simphom/labeling.hpp"
#include "simphom/linkpred.hpp"

namespace simphom {

/// Summary columns: nodes, classes, edges (|X^1|), closed-and-filled triangles (|X^2|),
/// distinct timestamps, and raw record count.
struct DatasetStats {
  std::string name;
  std::size_t nodes = 0;
  std::size_t classes = 0;
  std::size_t edges = 0;
  std::size_t triangles = 0;
  std::size_t time_steps = 0;
  std::size_t records = 0;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

/// A loaded dataset. Node ids are dense: internal id i stands for external_ids[i], which
/// are ascending. Every labeled node is present, including isolated ones.
struct DatasetBundle {
  std::string name;
  std::vector<TimestampedSimplex> stream;  ///< stable-sorted by time
  bool timed = false;
  ClassLabeling labeling;
  std::vector<std::int64_t> external_ids;

  std::size_t num_nodes() const noexcept { return labeling.num_nodes(); }
  TemporalDataset temporal() const { return {name, stream, labeling}; }
  std::vector<Simplex> simplices() const;
  Hypergraph hypergraph() const;
  /// Downward closure of the records, truncated at max_dimension (negative: unbounded).
  SimplicialComplex complex(int max_dimension = 2) const;

  friend bool operator==(const DatasetBundle&, const DatasetBundle&) = default;
};

/// Paths of the nverts/simplices/times layout for a common prefix: PREFIX-nverts.txt,
/// PREFIX-simplices.txt, PREFIX-times.txt and PREFIX-node-labels.txt.
struct SimplexDatasetPaths {
  std::filesystem::path nverts;
  std::filesystem::path simplices;
  std::optional<std::filesystem::path> times;
  std::filesystem::path labels;

  /// The times file is used when it exists.
  static SimplexDatasetPaths from_prefix(const std::string& prefix);
};

/// Labels file: either one label per line (line i labels node i, 1-based) or "id label"
/// per line. Blank lines and lines starting with '#' are skipped in the two-column form.
/// Class ids follow the sorted label names (numerically when every name is an integer).
///
/// Throws ParseError (file:line) on malformed lines or count mismatches, and
/// MissingLabel listing the ids of nodes that occur in records but have no label.
DatasetBundle load_simplex_dataset(const SimplexDatasetPaths& paths, std::string name = {});

/// "u v" or "u v time" per line; '#' comments and blank lines are skipped. Repeated
/// edges stay as separate records, so their multiplicity is kept. Throws MalformedInput
/// for self-loops and MissingLabel / DomainError as above.
DatasetBundle load_edge_list_with_labels(const std::filesystem::path& edges, const std::filesystem::path& labels,
                                         std::string name = {});

/// Writes the four files of `prefix` (labels in "id label" form). Times are written only
/// for timed bundles.
void write_simplex_dataset(const DatasetBundle& bundle, const std::string& prefix);

DatasetStats dataset_stats(const DatasetBundle& bundle);

}  // namespace simphom
