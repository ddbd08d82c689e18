#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "simphom/complex.hpp"
#include "simphom/labeling.hpp"

namespace simphom {

struct BootstrapSpec {
  std::size_t trials = 50;
  /// Share of nodes kept per trial, drawn without replacement.
  double node_fraction = 0.8;
  std::uint64_t seed = 1;

  void validate() const;
};

/// A labeled complex restricted to a node subset, with node ids remapped densely in
/// ascending order of the original ids.
struct Subsample {
  SimplicialComplex complex;
  ClassLabeling labeling;
  std::vector<NodeId> nodes;  ///< original ids, ascending
};

/// Keeps exactly the simplices whose vertices are all in `nodes`.
Subsample induced_subcomplex(const SimplicialComplex& complex, const ClassLabeling& labeling,
                             std::span<const NodeId> nodes);

/// Node set of one trial: round(fraction * n) distinct ids (at least 1), ascending.
/// Depends only on (n, fraction, seed, trial).
std::vector<NodeId> bootstrap_node_sample(std::size_t n, double fraction, std::uint64_t seed, std::size_t trial);

/// Records lying entirely inside `nodes` (ascending), renumbered as in induced_subcomplex.
std::vector<Simplex> induced_records(std::span<const Simplex> records, std::span<const NodeId> nodes);

/// Scores computed on one trial. NaN marks an undefined value; throwing UndefinedScore
/// marks the whole trial as missing.
using ScoreFunction = std::function<std::vector<double>(const Subsample&)>;

struct BootstrapResult {
  std::size_t trials = 0;
  std::vector<double> mean;      ///< per quantity, over the trials where it was defined
  std::vector<double> std_dev;   ///< sample standard deviation (n - 1), NaN with < 2 values
  std::vector<std::size_t> missing;
  std::vector<std::vector<double>> values;  ///< values[trial][quantity]
};

/// Throws DomainError for an invalid spec, or when every trial is missing.
BootstrapResult bootstrap_scores(const SimplicialComplex& complex, const ClassLabeling& labeling,
                                 const BootstrapSpec& spec, const ScoreFunction& score);

struct RegressionResult {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
  double p_value = 1;  ///< two-sided t-test on the slope, n - 2 degrees of freedom
  double slope_stderr = 0;
  std::size_t n = 0;
};

/// Ordinary least squares of y on x with an intercept. Needs n >= 3 and non-constant x.
RegressionResult ols(std::span<const double> x, std::span<const double> y);

struct ScorePair {
  std::string dataset;
  double graph_score = 0;
  double target_score = 0;
};

/// OLS of log(target) on log(graph score). Throws DomainError naming the dataset when a
/// score is not positive, and when fewer than 3 pairs are given.
RegressionResult explained_variance(std::span<const ScorePair> pairs);

}  // namespace simphom
