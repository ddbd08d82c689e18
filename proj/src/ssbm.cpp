#include "simphom/ssbm.hpp"

#include <cmath>
#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "simphom/enumerate.hpp"
#include "simphom/errors.hpp"
#include "simphom/homophily.hpp"
#include "simphom/rng.hpp"

namespace simphom {
namespace {

enum Stage : std::uint64_t { kEdgeStage = 1, kFillStage = 2 };

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(name) + " = " + std::to_string(p) + " is not a probability");
  }
}

struct TrialScores {
  bool defined = false;
  double hypergraph = 0;
  double simplicial = 0;
};

TrialScores score_sample(const SsbmSample& sample) {
  TrialScores out;
  try {
    const ScoreReport h = hypergraph_score(sample.complex.simplices(2), sample.labeling);
    const ScoreReport s = simplicial_score(sample.complex, sample.labeling, 2);
    out.hypergraph = h.score_value();
    out.simplicial = s.score_value();
    out.defined = std::isfinite(out.hypergraph) && std::isfinite(out.simplicial);
  } catch (const UndefinedScore&) {
    out.defined = false;
  }
  return out;
}

std::vector<SweepPoint> run_sweep(const SweepConfig& config, bool left) {
  if (config.trials < 2) throw DomainError("a sweep needs at least 2 trials");
  const std::size_t points = config.ratios.size();
  std::vector<SsbmParams> params(points);
  for (std::size_t r = 0; r < points; ++r) {
    SsbmParams& p = params[r];
    p.community_sizes = config.community_sizes;
    if (left) {
      p.q1 = config.q1;
      p.p1 = config.ratios[r] * config.q1;
      p.p2 = p.q2 = config.fill;
    } else {
      p.q1 = config.q1;
      p.p1 = config.edge_ratio * config.q1;
      p.q2 = config.q2;
      p.p2 = config.ratios[r] * config.q2;
    }
    p.validate();
  }

  const std::size_t jobs = points * config.trials;
  std::vector<TrialScores> results(jobs);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(jobs); ++j) {
    const std::size_t r = static_cast<std::size_t>(j) / config.trials;
    const std::size_t t = static_cast<std::size_t>(j) % config.trials;
    SsbmParams p = params[r];
    p.seed = keyed_hash(config.seed, {r, t});
    results[static_cast<std::size_t>(j)] = score_sample(generate(p));
  }

  std::vector<SweepPoint> out;
  for (std::size_t r = 0; r < points; ++r) {
    std::vector<double> hyper, simp;
    std::size_t dropped = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const TrialScores& s = results[r * config.trials + t];
      if (!s.defined) {
        ++dropped;
        continue;
      }
      hyper.push_back(s.hypergraph);
      simp.push_back(s.simplicial);
    }
    for (const auto& [name, values] : {std::pair{"hypergraph_g3", &hyper}, std::pair{"simplicial_k2", &simp}}) {
      SweepPoint pt;
      pt.ratio = config.ratios[r];
      pt.metric = name;
      pt.trials = values->size();
      pt.dropped = dropped;
      const MeanCi ci = normal_ci(*values);
      pt.mean = ci.mean;
      pt.ci_lo = ci.lo;
      pt.ci_hi = ci.hi;
      out.push_back(pt);
    }
  }
  return out;
}

}  // namespace

void SsbmParams::validate() const {
  check_probability(p1, "p1");
  check_probability(q1, "q1");
  check_probability(p2, "p2");
  check_probability(q2, "q2");
  if (std::accumulate(community_sizes.begin(), community_sizes.end(), std::size_t{0}) == 0) {
    throw DomainError("SSBM needs at least one nonempty community");
  }
}

SsbmSample generate(const SsbmParams& params) {
  params.validate();
  const std::size_t n = std::accumulate(params.community_sizes.begin(), params.community_sizes.end(), std::size_t{0});
  std::vector<ClassId> labels;
  labels.reserve(n);
  for (std::size_t c = 0; c < params.community_sizes.size(); ++c) {
    labels.insert(labels.end(), params.community_sizes[c], static_cast<ClassId>(c));
  }
  ClassLabeling labeling(labels, std::max<std::size_t>(2, params.community_sizes.size()));

  // Edge stage: one Bernoulli draw per pair, keyed by the pair.
  std::vector<std::vector<NodeId>> rows(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const auto u = static_cast<NodeId>(i);
    auto& row = rows[u];
    for (NodeId v = u + 1; v < n; ++v) {
      const double p = labels[u] == labels[v] ? params.p1 : params.q1;
      if (p > 0 && keyed_uniform(params.seed, {kEdgeStage, u, v}) < p) row.push_back(v);
    }
  }
  GroupList edges(2);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : rows[u]) {
      const NodeId e[2] = {u, v};
      edges.push_back(e);
    }
  }
  BuildOptions options;
  options.num_nodes = n;
  options.max_dimension = 2;
  const GroupView edge_view = edges.view();
  const SimplicialComplex graph = build_complex_from_groups(std::span(&edge_view, 1), options);

  // Fill stage: one draw per closed triangle, keyed by its sorted vertices.
  const std::vector<Triangle> closed = closed_triangles(graph);
  std::vector<char> keep(closed.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(closed.size()); ++i) {
    const Triangle& t = closed[static_cast<std::size_t>(i)];
    const bool same = labels[t[0]] == labels[t[1]] && labels[t[1]] == labels[t[2]];
    const double p = same ? params.p2 : params.q2;
    keep[static_cast<std::size_t>(i)] = p > 0 && keyed_uniform(params.seed, {kFillStage, t[0], t[1], t[2]}) < p;
  }
  GroupList filled(3);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (keep[i]) filled.push_back(closed[i]);
  }

  const GroupView parts[2] = {edges.view(), filled.view()};
  return {build_complex_from_groups(parts, options), std::move(labeling), params};
}

SimplicialComplex random_gnm_graph(std::size_t nodes, std::size_t edges, std::uint64_t seed) {
  const double possible = 0.5 * static_cast<double>(nodes) * static_cast<double>(nodes - (nodes > 0));
  if (static_cast<double>(edges) > possible) throw DomainError("more edges requested than vertex pairs");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(nodes - 1));
  std::vector<std::uint64_t> keys;
  keys.reserve(edges);
  // Draw with replacement, drop duplicates, top up; converges fast for sparse graphs.
  while (keys.size() < edges) {
    while (keys.size() < edges) {
      NodeId u = pick(rng), v = pick(rng);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      keys.push_back((std::uint64_t{u} << 32) | v);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  }
  GroupList list(2);
  list.reserve(edges);
  for (std::uint64_t k : keys) {
    const NodeId e[2] = {static_cast<NodeId>(k >> 32), static_cast<NodeId>(k & 0xffffffffu)};
    list.push_back(e);
  }
  BuildOptions options;
  options.num_nodes = nodes;
  options.max_dimension = 1;
  const GroupView view = list.view();
  return build_complex_from_groups(std::span(&view, 1), options);
}

SweepConfig default_left_sweep(bool paper_scale) {
  SweepConfig c;
  c.ratios = {1.0, 2.0, 4.0, 8.0, 16.0};
  if (paper_scale) {
    c.community_sizes = {1000, 1000};
    c.q1 = 0.01;
  }
  return c;
}

SweepConfig default_right_sweep(bool paper_scale) {
  SweepConfig c;
  c.ratios = {0.25, 0.5, 1.0, 2.0, 4.0};
  if (paper_scale) {
    c.community_sizes = {1000, 1000};
    c.q1 = 0.01;
  }
  return c;
}

MeanCi normal_ci(const std::vector<double>& values) {
  MeanCi out;
  const std::size_t n = values.size();
  if (n == 0) {
    out.mean = out.lo = out.hi = std::nan("");
    return out;
  }
  double sum = 0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(n);
  double ss = 0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
  const double half = 1.96 * sd / std::sqrt(static_cast<double>(n));
  out.lo = out.mean - half;
  out.hi = out.mean + half;
  return out;
}

std::vector<SweepPoint> sweep_experiment_left(const SweepConfig& config) { return run_sweep(config, true); }

std::vector<SweepPoint> sweep_experiment_right(const SweepConfig& config) { return run_sweep(config, false); }

}  // namespace simphom
