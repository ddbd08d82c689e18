#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simphom/complex.hpp"
#include "simphom/labeling.hpp"

namespace simphom {

/// Simplicial stochastic block model: edges with probability p1 inside a community and q1
/// across, then every closed triangle of the resulting graph filled with probability p2
/// when its three nodes share a community and q2 otherwise.
struct SsbmParams {
  std::vector<std::size_t> community_sizes;
  double p1 = 0;
  double q1 = 0;
  double p2 = 0;
  double q2 = 0;
  std::uint64_t seed = 0;

  /// Throws DomainError on a probability outside [0, 1] or no nodes.
  void validate() const;
};

struct SsbmSample {
  SimplicialComplex complex;
  ClassLabeling labeling;
  SsbmParams params;
};

/// Deterministic in params (including seed) and independent of the thread count.
SsbmSample generate(const SsbmParams& params);

/// Uniform random graph with exactly `edges` distinct edges on `nodes` vertices, as a
/// 1-dimensional complex. Throws DomainError when more edges are asked for than exist.
SimplicialComplex random_gnm_graph(std::size_t nodes, std::size_t edges, std::uint64_t seed);

struct SweepConfig {
  std::vector<std::size_t> community_sizes{200, 200};
  std::vector<double> ratios;
  std::size_t trials = 30;
  std::uint64_t seed = 1;
  /// Left panel: q1 fixed, p1 = ratio * q1, p2 = q2 = fill.
  double q1 = 0.05;
  double fill = 0.5;
  /// Right panel: p1 = 4 q1, q2 fixed, p2 = ratio * q2.
  double q2 = 0.2;
  double edge_ratio = 4.0;
};

/// Defaults for the two panels at desk scale (two communities of 200) or paper scale
/// (two communities of 1000).
SweepConfig default_left_sweep(bool paper_scale = false);
SweepConfig default_right_sweep(bool paper_scale = false);

struct SweepPoint {
  double ratio = 0;
  std::string metric;  ///< "hypergraph_g3" or "simplicial_k2"
  double mean = 0;
  double ci_lo = 0;
  double ci_hi = 0;
  std::size_t trials = 0;   ///< trials with a defined score
  std::size_t dropped = 0;  ///< degenerate samples (no triangles / undefined score)
};

/// Mean and normal-approximation 95% interval (mean +- 1.96 sd / sqrt(n)).
struct MeanCi {
  double mean = 0;
  double lo = 0;
  double hi = 0;
};
MeanCi normal_ci(const std::vector<double>& values);

/// Varies p1/q1 with p2 = q2. Throws DomainError for trials < 2 or a ratio pushing p1
/// above 1.
std::vector<SweepPoint> sweep_experiment_left(const SweepConfig& config);
/// Varies p2/q2 with p1 = edge_ratio * q1.
std::vector<SweepPoint> sweep_experiment_right(const SweepConfig& config);

}  // namespace simphom
