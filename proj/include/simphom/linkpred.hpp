#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "simphom/auc.hpp"
#include "simphom/complex.hpp"
#include "simphom/enumerate.hpp"
#include "simphom/labeling.hpp"
#include "simphom/logistic.hpp"
#include "simphom/simplex.hpp"

namespace simphom {

struct TimestampedSimplex {
  Simplex simplex;
  double time = 0;

  friend bool operator==(const TimestampedSimplex&, const TimestampedSimplex&) = default;
};

struct TemporalDataset {
  std::string name;
  std::vector<TimestampedSimplex> stream;  ///< nondecreasing in time
  ClassLabeling labeling;
};

struct TemporalSplit {
  std::span<const TimestampedSimplex> train;
  std::span<const TimestampedSimplex> test;
};

/// First floor(fraction * N) records in stream order go to train. Throws InputError for an
/// empty or unsorted stream, DomainError for a fraction outside (0, 1).
TemporalSplit temporal_split(std::span<const TimestampedSimplex> stream, double fraction = 0.5);

/// Aggregates of a training window needed for candidate features.
class TrainingWindow {
 public:
  TrainingWindow(std::span<const TimestampedSimplex> records, std::size_t num_nodes);

  const SimplicialComplex& complex() const noexcept { return complex_; }
  /// Training records (of size >= 2) containing both nodes.
  std::uint32_t tie_frequency(NodeId u, NodeId v) const;
  /// Training records containing the node.
  std::uint32_t simplex_degree(NodeId v) const { return v < simplex_degree_.size() ? simplex_degree_[v] : 0; }
  std::size_t degree(NodeId v) const { return complex_.degree(v); }
  std::size_t common_neighbors(NodeId u, NodeId v) const;

 private:
  SimplicialComplex complex_;
  std::unordered_map<std::uint64_t, std::uint32_t> ties_;
  std::vector<std::uint32_t> simplex_degree_;
};

struct CandidateTriangle {
  Triangle nodes{};
  bool positive = false;
};

/// Closed but unfilled triangles of the training window, each labeled positive iff some
/// test record of size >= 3 contains it.
std::vector<CandidateTriangle> generate_candidates(const TrainingWindow& window,
                                                   std::span<const TimestampedSimplex> test);

/// Column layout: tie frequencies (3), degrees (3), simplex degrees (3), common neighbors
/// (3), then log1p of those twelve, then the homogeneity bit when requested. Within each
/// group of three the values are sorted in descending order, which makes the vector
/// independent of the order of the candidate's nodes.
std::size_t feature_count(bool with_labels);
std::vector<std::string> feature_names(bool with_labels);
std::vector<double> extract_features(const CandidateTriangle& candidate, const TrainingWindow& window,
                                     const ClassLabeling* labels);
FeatureMatrix extract_feature_matrix(std::span<const CandidateTriangle> candidates, const TrainingWindow& window,
                                     const ClassLabeling* labels);

struct BenchmarkConfig {
  double train_fraction = 0.5;
  /// The model is fit inside the training window: candidates of its first `fit_fraction`
  /// labeled by the rest of it. Evaluation uses candidates of the whole training window
  /// labeled by the test window.
  double fit_fraction = 0.5;
  LogisticConfig logistic;
  std::size_t bootstrap_trials = 200;
  std::uint64_t seed = 1;
};

struct BenchmarkRow {
  std::string dataset;
  EvalResult without_labels;
  EvalResult with_labels;
  double simplicial_score = 0;  ///< 2-simplicial score of the training complex (NaN if undefined)
  double hypergraph_score = 0;  ///< g = 3 hypergraph score of the training records (NaN if undefined)
  std::size_t fit_candidates = 0;
  std::size_t fit_positives = 0;
  std::size_t test_candidates = 0;
  std::size_t test_positives = 0;
  double fit_loss_without = 0;
  double fit_loss_with = 0;
};

/// Full protocol on one labeled temporal dataset. Throws InputError when either phase has
/// no candidates or a single class.
BenchmarkRow run_benchmark(const TemporalDataset& dataset, const BenchmarkConfig& config = {});

/// Turns one SSBM sample into a stream: every edge and filled triangle becomes a record
/// with an independent uniform timestamp.
TemporalDataset ssbm_stream(const SimplicialComplex& complex, const ClassLabeling& labeling, std::uint64_t seed);

}  // namespace simphom
