#include "simphom/logistic.hpp"

#include <cmath>
#include <string>

#include "simphom/errors.hpp"

namespace simphom {
namespace {

double log1pexp(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

struct Objective {
  const Eigen::MatrixXd& z;  // standardized features
  const Eigen::VectorXd& y;
  double l2;

  double value(const Eigen::VectorXd& w, double b) const {
    const Eigen::VectorXd margin = (z * w).array() + b;
    double loss = 0;
    for (Eigen::Index i = 0; i < margin.size(); ++i) loss += log1pexp(margin[i]) - y[i] * margin[i];
    return loss / static_cast<double>(z.rows()) + 0.5 * l2 * w.squaredNorm();
  }
};

void check_inputs(const FeatureMatrix& x, const std::vector<std::uint8_t>& labels) {
  if (static_cast<std::size_t>(x.rows()) != labels.size()) {
    throw InputError("feature rows (" + std::to_string(x.rows()) + ") and labels (" + std::to_string(labels.size()) +
                     ") differ");
  }
}

}  // namespace

double LogisticModel::decision(const Eigen::Ref<const Eigen::RowVectorXd>& row) const {
  const Eigen::RowVectorXd z = (row - mean.transpose()).cwiseQuotient(scale.transpose());
  return z.dot(weights) + intercept;
}

double LogisticModel::probability(const Eigen::Ref<const Eigen::RowVectorXd>& row) const {
  return sigmoid(decision(row));
}

std::vector<double> LogisticModel::predict(const FeatureMatrix& x) const {
  std::vector<double> out(static_cast<std::size_t>(x.rows()));
  for (Eigen::Index i = 0; i < x.rows(); ++i) out[static_cast<std::size_t>(i)] = probability(x.row(i));
  return out;
}

LogisticModel train(const FeatureMatrix& x, const std::vector<std::uint8_t>& labels, const LogisticConfig& config) {
  check_inputs(x, labels);
  if (!(config.l2 > 0)) throw DomainError("l2 must be positive");
  std::size_t positives = 0;
  for (auto l : labels) positives += l ? 1 : 0;
  if (positives == 0 || positives == labels.size()) {
    throw InputError("training labels contain a single class (" + std::to_string(positives) + " positives of " +
                     std::to_string(labels.size()) + ")");
  }

  const auto n = x.rows();
  const auto d = x.cols();
  LogisticModel model;
  model.config = config;
  model.mean = x.colwise().mean().transpose();
  model.scale.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const double var = (x.col(j).array() - model.mean[j]).square().mean();
    model.scale[j] = var > 1e-24 ? std::sqrt(var) : 1.0;
  }
  const Eigen::MatrixXd z =
      (x.rowwise() - model.mean.transpose()).array().rowwise() / model.scale.transpose().array();
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) y[i] = labels[static_cast<std::size_t>(i)] ? 1.0 : 0.0;

  const Objective f{z, y, config.l2};
  Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
  double b = std::log(static_cast<double>(positives) / static_cast<double>(n - static_cast<Eigen::Index>(positives)));
  double current = f.value(w, b);
  const double inv_n = 1.0 / static_cast<double>(n);

  // Newton steps on (w, b) with backtracking; the objective is strictly convex in w and
  // convex in b, and the l2 term keeps the Hessian positive definite on w.
  for (model.iterations = 0; model.iterations < config.max_iterations; ++model.iterations) {
    const Eigen::VectorXd margin = (z * w).array() + b;
    Eigen::VectorXd p(n), s(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      p[i] = sigmoid(margin[i]);
      s[i] = p[i] * (1 - p[i]);
    }
    const Eigen::VectorXd r = p - y;
    Eigen::VectorXd grad(d + 1);
    grad.head(d) = z.transpose() * r * inv_n + config.l2 * w;
    grad[d] = r.sum() * inv_n;
    if (grad.lpNorm<Eigen::Infinity>() < config.tolerance) {
      model.converged = true;
      break;
    }
    Eigen::MatrixXd h(d + 1, d + 1);
    const Eigen::MatrixXd zs = z.array().colwise() * s.array();
    h.topLeftCorner(d, d) = z.transpose() * zs * inv_n;
    h.topLeftCorner(d, d).diagonal().array() += config.l2;
    h.topRightCorner(d, 1) = zs.colwise().sum().transpose() * inv_n;
    h.bottomLeftCorner(1, d) = h.topRightCorner(d, 1).transpose();
    h(d, d) = s.sum() * inv_n + 1e-12;
    const Eigen::VectorXd step = h.ldlt().solve(grad);

    double t = 1.0;
    bool moved = false;
    for (int back = 0; back < 50; ++back, t *= 0.5) {
      const Eigen::VectorXd w_next = w - t * step.head(d);
      const double b_next = b - t * step[d];
      const double next = f.value(w_next, b_next);
      if (next <= current - 1e-4 * t * grad.dot(step)) {
        w = w_next;
        b = b_next;
        current = next;
        moved = true;
        break;
      }
    }
    if (!moved) {
      // No representable improvement left; the gradient is at round-off level.
      model.converged = grad.lpNorm<Eigen::Infinity>() < 1e-6;
      break;
    }
  }
  model.weights = w;
  model.intercept = b;
  return model;
}

double regularized_log_loss(const LogisticModel& model, const FeatureMatrix& x,
                            const std::vector<std::uint8_t>& labels) {
  check_inputs(x, labels);
  if (x.rows() == 0) throw InputError("empty feature matrix");
  double loss = 0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double m = model.decision(x.row(i));
    loss += log1pexp(m) - (labels[static_cast<std::size_t>(i)] ? m : 0.0);
  }
  return loss / static_cast<double>(x.rows()) + 0.5 * model.config.l2 * model.weights.squaredNorm();
}

}  // namespace simphom
