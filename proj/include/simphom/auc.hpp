#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace simphom {

/// Area under the precision-recall curve, average-precision convention: thresholds are
/// the distinct scores in descending order (tied scores enter together) and the area is
/// sum_i (R_i - R_{i-1}) P_i. Throws InputError with no positives or mismatched sizes.
double auc_pr(std::span<const double> scores, std::span<const std::uint8_t> labels);

/// Fraction of positive labels, the AUC-PR of a random scorer.
double prevalence(std::span<const std::uint8_t> labels);

struct Interval {
  double lo = 0;
  double hi = 0;
};

/// Percentile bootstrap of auc_pr / prevalence over resamples (with replacement) of the
/// examples. A resample without positives is redrawn, up to 1000 times per trial.
/// Throws DomainError for trials < 2.
Interval bootstrap_ci(std::span<const double> scores, std::span<const std::uint8_t> labels, std::size_t trials,
                      std::uint64_t seed, double level = 0.95);

struct EvalResult {
  double auc_pr = 0;
  double random_baseline = 0;
  double relative_score = 0;
  Interval ci;
};

EvalResult evaluate(std::span<const double> scores, std::span<const std::uint8_t> labels, std::size_t trials,
                    std::uint64_t seed);

}  // namespace simphom
