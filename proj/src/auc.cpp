#include "simphom/auc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "simphom/errors.hpp"

namespace simphom {
namespace {

void check_sizes(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size()) {
    throw InputError("scores (" + std::to_string(scores.size()) + ") and labels (" + std::to_string(labels.size()) +
                     ") differ in length");
  }
}

// Linear interpolation between order statistics (the usual "type 7" quantile).
double quantile(const std::vector<double>& sorted, double q) {
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

double auc_pr(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  check_sizes(scores, labels);
  const auto positives = static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [](auto l) { return l != 0; }));
  if (positives == 0) throw InputError("AUC-PR is undefined without positive examples");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  double area = 0, prev_recall = 0;
  std::size_t tp = 0, seen = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double s = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == s; ++i) {
      ++seen;
      tp += labels[order[i]] ? 1 : 0;
    }
    const double recall = static_cast<double>(tp) / static_cast<double>(positives);
    const double precision = static_cast<double>(tp) / static_cast<double>(seen);
    area += (recall - prev_recall) * precision;
    prev_recall = recall;
  }
  return area;
}

double prevalence(std::span<const std::uint8_t> labels) {
  if (labels.empty()) throw InputError("prevalence of an empty label set");
  const auto positives = std::count_if(labels.begin(), labels.end(), [](auto l) { return l != 0; });
  return static_cast<double>(positives) / static_cast<double>(labels.size());
}

Interval bootstrap_ci(std::span<const double> scores, std::span<const std::uint8_t> labels, std::size_t trials,
                      std::uint64_t seed, double level) {
  check_sizes(scores, labels);
  if (trials < 2) throw DomainError("bootstrap needs at least 2 trials");
  if (!(level > 0 && level < 1)) throw DomainError("confidence level must lie in (0, 1)");
  if (std::none_of(labels.begin(), labels.end(), [](auto l) { return l != 0; })) {
    throw InputError("bootstrap of AUC-PR without positive examples");
  }
  constexpr int kMaxRedraws = 1000;
  const std::size_t n = scores.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<double> s(n), rel;
  std::vector<std::uint8_t> l(n);
  rel.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    int redraws = 0;
    for (;;) {
      std::size_t pos = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = pick(rng);
        s[i] = scores[j];
        l[i] = labels[j];
        pos += l[i] ? 1 : 0;
      }
      if (pos > 0) break;
      if (++redraws >= kMaxRedraws) throw InputError("bootstrap kept drawing resamples without positives");
    }
    rel.push_back(auc_pr(s, l) / prevalence(l));
  }
  std::sort(rel.begin(), rel.end());
  const double tail = (1 - level) / 2;
  return {quantile(rel, tail), quantile(rel, 1 - tail)};
}

EvalResult evaluate(std::span<const double> scores, std::span<const std::uint8_t> labels, std::size_t trials,
                    std::uint64_t seed) {
  EvalResult out;
  out.auc_pr = auc_pr(scores, labels);
  out.random_baseline = prevalence(labels);
  out.relative_score = out.auc_pr / out.random_baseline;
  out.ci = bootstrap_ci(scores, labels, trials, seed);
  return out;
}

}  // namespace simphom
