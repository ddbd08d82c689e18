#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace simphom {

using FeatureMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct LogisticConfig {
  /// Strength of the (1/2) l2 ||w||^2 penalty added to the mean log-loss. The intercept is
  /// not penalized.
  double l2 = 1e-3;
  std::size_t max_iterations = 100;
  /// Stop once the infinity norm of the gradient falls below this.
  double tolerance = 1e-9;
};

/// L2-regularized logistic regression on standardized features.
struct LogisticModel {
  Eigen::VectorXd weights;  ///< in standardized feature space
  double intercept = 0;
  Eigen::VectorXd mean;     ///< per-column training mean
  Eigen::VectorXd scale;    ///< per-column training standard deviation (1 for constant columns)
  LogisticConfig config;
  std::size_t iterations = 0;
  bool converged = false;

  double decision(const Eigen::Ref<const Eigen::RowVectorXd>& row) const;
  double probability(const Eigen::Ref<const Eigen::RowVectorXd>& row) const;
  std::vector<double> predict(const FeatureMatrix& x) const;
};

/// Fits by damped Newton iterations on the regularized mean log-loss. Standardization
/// parameters come from `x` only. Deterministic. Throws InputError when labels contain a
/// single class or sizes disagree.
LogisticModel train(const FeatureMatrix& x, const std::vector<std::uint8_t>& labels,
                    const LogisticConfig& config = {});

/// Mean log-loss plus the model's l2 penalty, evaluated on (x, labels).
double regularized_log_loss(const LogisticModel& model, const FeatureMatrix& x,
                            const std::vector<std::uint8_t>& labels);

}  // namespace simphom
