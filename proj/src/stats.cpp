#include "simphom/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/math/distributions/students_t.hpp>

#include "simphom/errors.hpp"
#include "simphom/rng.hpp"

namespace simphom {

void BootstrapSpec::validate() const {
  if (trials < 2) throw DomainError("bootstrap needs at least 2 trials");
  if (!(node_fraction > 0 && node_fraction <= 1)) throw DomainError("node fraction must lie in (0, 1]");
}

Subsample induced_subcomplex(const SimplicialComplex& complex, const ClassLabeling& labeling,
                             std::span<const NodeId> nodes) {
  constexpr NodeId kDropped = ~NodeId{0};
  std::vector<NodeId> remap(complex.num_nodes(), kDropped);
  std::vector<NodeId> kept(nodes.begin(), nodes.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<ClassId> labels;
  labels.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] >= complex.num_nodes()) throw DomainError("node " + std::to_string(kept[i]) + " is not in the complex");
    remap[kept[i]] = static_cast<NodeId>(i);
    labels.push_back(labeling.label(kept[i]));
  }

  std::vector<GroupList> layers;
  std::vector<NodeId> buf;
  for (int d = 1; d <= complex.max_dimension(); ++d) {
    const GroupView layer = complex.simplices(d);
    GroupList out(static_cast<std::size_t>(d) + 1);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      buf.clear();
      for (NodeId v : layer[i]) {
        if (remap[v] == kDropped) break;
        buf.push_back(remap[v]);
      }
      // Remapping preserves order, so the group stays canonical.
      if (buf.size() == layer[i].size()) out.push_back(buf);
    }
    layers.push_back(std::move(out));
  }
  std::vector<GroupView> views(layers.begin(), layers.end());
  BuildOptions options;
  options.num_nodes = kept.size();
  options.max_dimension = complex.dimension_cap();
  return {build_complex_from_groups(views, options), ClassLabeling(std::move(labels), labeling.num_classes(),
                                                                   labeling.class_names()),
          std::move(kept)};
}

std::vector<Simplex> induced_records(std::span<const Simplex> records, std::span<const NodeId> nodes) {
  std::vector<Simplex> out;
  std::vector<NodeId> buf;
  for (const Simplex& r : records) {
    buf.clear();
    for (NodeId v : r.vertices()) {
      const auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
      if (it == nodes.end() || *it != v) break;
      buf.push_back(static_cast<NodeId>(it - nodes.begin()));
    }
    if (buf.size() == r.size()) out.emplace_back(buf);
  }
  return out;
}

std::vector<NodeId> bootstrap_node_sample(std::size_t n, double fraction, std::uint64_t seed, std::size_t trial) {
  const auto k = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n))));
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  std::mt19937_64 rng(keyed_hash(seed, {trial}));
  // Partial Fisher-Yates: the first k slots become a uniform k-subset.
  for (std::size_t i = 0; i < std::min(k, n); ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  ids.resize(std::min(k, n));
  std::sort(ids.begin(), ids.end());
  return ids;
}

BootstrapResult bootstrap_scores(const SimplicialComplex& complex, const ClassLabeling& labeling,
                                 const BootstrapSpec& spec, const ScoreFunction& score) {
  spec.validate();
  const std::size_t n = complex.num_nodes();
  std::vector<std::vector<double>> values(spec.trials);
  std::vector<char> failed(spec.trials, 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(spec.trials); ++t) {
    const auto trial = static_cast<std::size_t>(t);
    const auto nodes = bootstrap_node_sample(n, spec.node_fraction, spec.seed, trial);
    try {
      const Subsample sub = induced_subcomplex(complex, labeling, nodes);
      values[trial] = score(sub);
    } catch (const UndefinedScore&) {
      failed[trial] = 1;
    }
  }

  std::size_t width = 0;
  for (std::size_t t = 0; t < spec.trials; ++t) {
    if (failed[t]) continue;
    if (width == 0) width = values[t].size();
    if (values[t].size() != width) throw DomainError("score function returned a varying number of values");
  }
  if (width == 0) throw DomainError("every bootstrap trial was undefined");

  BootstrapResult out;
  out.trials = spec.trials;
  out.mean.assign(width, 0);
  out.std_dev.assign(width, std::nan(""));
  out.missing.assign(width, 0);
  for (std::size_t q = 0; q < width; ++q) {
    std::vector<double> xs;
    for (std::size_t t = 0; t < spec.trials; ++t) {
      if (!failed[t] && std::isfinite(values[t][q])) {
        xs.push_back(values[t][q]);
      } else {
        ++out.missing[q];
      }
    }
    if (xs.empty()) {
      out.mean[q] = std::nan("");
      continue;
    }
    const double m = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    out.mean[q] = m;
    if (xs.size() >= 2) {
      double ss = 0;
      for (double v : xs) ss += (v - m) * (v - m);
      out.std_dev[q] = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
  }
  for (std::size_t t = 0; t < spec.trials; ++t) {
    if (failed[t]) values[t].assign(width, std::nan(""));
  }
  out.values = std::move(values);
  return out;
}

RegressionResult ols(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("regression inputs differ in length");
  const std::size_t n = x.size();
  if (n < 3) throw DomainError("regression needs at least 3 points, got " + std::to_string(n));
  const double nd = static_cast<double>(n);
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / nd;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / nd;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw DomainError("regression predictor is constant");

  RegressionResult r;
  r.n = n;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - r.intercept - r.slope * x[i];
    sse += e * e;
  }
  r.r_squared = syy > 0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  const double df = nd - 2;
  r.slope_stderr = std::sqrt(sse / df / sxx);
  if (r.slope_stderr == 0) {
    r.p_value = r.slope == 0 ? 1.0 : 0.0;
  } else {
    const boost::math::students_t dist(df);
    r.p_value = 2 * boost::math::cdf(boost::math::complement(dist, std::abs(r.slope / r.slope_stderr)));
  }
  return r;
}

RegressionResult explained_variance(std::span<const ScorePair> pairs) {
  if (pairs.size() < 3) throw DomainError("explained variance needs at least 3 datasets");
  std::vector<double> x, y;
  for (const auto& p : pairs) {
    if (!(p.graph_score > 0) || !(p.target_score > 0)) {
      throw DomainError("dataset '" + p.dataset + "' has a nonpositive score (graph " + std::to_string(p.graph_score) +
                        ", target " + std::to_string(p.target_score) + ")");
    }
    x.push_back(std::log(p.graph_score));
    y.push_back(std::log(p.target_score));
  }
  return ols(x, y);
}

}  // namespace simphom
