#include "simphom/linkpred.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <unordered_set>

#include "simphom/errors.hpp"
#include "simphom/homophily.hpp"
#include "simphom/hypergraph.hpp"
#include "simphom/rng.hpp"

namespace simphom {
namespace {

enum StreamKey : std::uint64_t { kEdgeTime = 0x7101, kTriangleTime = 0x7102 };

constexpr std::uint64_t pair_key(NodeId u, NodeId v) noexcept {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

struct TripleHash {
  std::size_t operator()(const Triangle& t) const noexcept { return keyed_hash(0, {t[0], t[1], t[2]}); }
};

// Every 3-subset of every record of size >= 3.
std::unordered_set<Triangle, TripleHash> triples_of(std::span<const TimestampedSimplex> records) {
  std::unordered_set<Triangle, TripleHash> out;
  for (const auto& r : records) {
    const auto v = r.simplex.vertices();
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b)
        for (std::size_t c = b + 1; c < v.size(); ++c) out.insert({v[a], v[b], v[c]});
  }
  return out;
}

void sort_desc(double* first) { std::sort(first, first + 3, std::greater<>()); }

std::vector<std::uint8_t> positives_of(std::span<const CandidateTriangle> candidates) {
  std::vector<std::uint8_t> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) out[i] = candidates[i].positive ? 1 : 0;
  return out;
}

std::size_t count_positive(const std::vector<std::uint8_t>& labels) {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), std::uint8_t{1}));
}

void require_two_classes(const std::vector<std::uint8_t>& labels, const char* phase) {
  const std::size_t pos = count_positive(labels);
  if (labels.empty()) throw InputError(std::string(phase) + ": no closed-unfilled candidate triangles");
  if (pos == 0 || pos == labels.size()) {
    throw InputError(std::string(phase) + ": candidates are all " + (pos == 0 ? "negative" : "positive") + " (" +
                     std::to_string(labels.size()) + " candidates)");
  }
}

double score_or_nan(const std::function<ScoreReport()>& f) {
  try {
    return f().score_value();
  } catch (const UndefinedScore&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

TemporalSplit temporal_split(std::span<const TimestampedSimplex> stream, double fraction) {
  if (stream.empty()) throw InputError("temporal split of an empty stream");
  if (!(fraction > 0 && fraction < 1)) throw DomainError("split fraction must lie in (0, 1)");
  for (std::size_t i = 1; i < stream.size(); ++i) {
    if (stream[i].time < stream[i - 1].time) {
      throw InputError("stream is not sorted by time at record " + std::to_string(i));
    }
  }
  const auto cut = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(stream.size())));
  return {stream.first(cut), stream.subspan(cut)};
}

TrainingWindow::TrainingWindow(std::span<const TimestampedSimplex> records, std::size_t num_nodes)
    : simplex_degree_(num_nodes, 0) {
  std::vector<Simplex> simplices;
  simplices.reserve(records.size());
  for (const auto& r : records) {
    const auto v = r.simplex.vertices();
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (v[a] >= num_nodes) throw MalformedInput("node id " + std::to_string(v[a]) + " outside the labeled node set");
      ++simplex_degree_[v[a]];
      for (std::size_t b = a + 1; b < v.size(); ++b) ++ties_[pair_key(v[a], v[b])];
    }
    simplices.push_back(r.simplex);
  }
  BuildOptions options;
  options.num_nodes = num_nodes;
  options.max_dimension = 2;
  complex_ = build_complex(simplices, options);
}

std::uint32_t TrainingWindow::tie_frequency(NodeId u, NodeId v) const {
  const auto it = ties_.find(pair_key(u, v));
  return it == ties_.end() ? 0 : it->second;
}

std::size_t TrainingWindow::common_neighbors(NodeId u, NodeId v) const {
  const auto a = complex_.neighbors(u);
  const auto b = complex_.neighbors(v);
  std::size_t n = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n, ++i, ++j;
    }
  }
  return n;
}

std::vector<CandidateTriangle> generate_candidates(const TrainingWindow& window,
                                                   std::span<const TimestampedSimplex> test) {
  const SimplicialComplex& x = window.complex();
  const auto future = triples_of(test);
  std::vector<CandidateTriangle> out;
  for (const Triangle& t : closed_triangles(x)) {
    if (x.contains(std::span<const NodeId>(t))) continue;
    out.push_back({t, future.contains(t)});
  }
  return out;
}

std::size_t feature_count(bool with_labels) { return with_labels ? 25 : 24; }

std::vector<std::string> feature_names(bool with_labels) {
  std::vector<std::string> raw;
  for (const char* group : {"tie_frequency", "degree", "simplex_degree", "common_neighbors"})
    for (int i = 0; i < 3; ++i) raw.push_back(std::string(group) + "_" + std::to_string(i));
  std::vector<std::string> out = raw;
  for (const auto& r : raw) out.push_back("log1p_" + r);
  if (with_labels) out.push_back("homogeneous");
  return out;
}

std::vector<double> extract_features(const CandidateTriangle& candidate, const TrainingWindow& window,
                                     const ClassLabeling* labels) {
  const auto& [a, b, c] = candidate.nodes;
  std::vector<double> f(feature_count(labels != nullptr));
  f[0] = window.tie_frequency(a, b);
  f[1] = window.tie_frequency(a, c);
  f[2] = window.tie_frequency(b, c);
  f[3] = static_cast<double>(window.degree(a));
  f[4] = static_cast<double>(window.degree(b));
  f[5] = static_cast<double>(window.degree(c));
  f[6] = window.simplex_degree(a);
  f[7] = window.simplex_degree(b);
  f[8] = window.simplex_degree(c);
  f[9] = static_cast<double>(window.common_neighbors(a, b));
  f[10] = static_cast<double>(window.common_neighbors(a, c));
  f[11] = static_cast<double>(window.common_neighbors(b, c));
  for (int g = 0; g < 4; ++g) sort_desc(f.data() + 3 * g);
  for (int i = 0; i < 12; ++i) f[12 + i] = std::log1p(f[i]);
  if (labels) f[24] = is_homogeneous(std::span<const NodeId>(candidate.nodes), *labels) ? 1.0 : 0.0;
  return f;
}

FeatureMatrix extract_feature_matrix(std::span<const CandidateTriangle> candidates, const TrainingWindow& window,
                                     const ClassLabeling* labels) {
  FeatureMatrix m(static_cast<Eigen::Index>(candidates.size()), static_cast<Eigen::Index>(feature_count(labels)));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(candidates.size()); ++i) {
    const auto f = extract_features(candidates[static_cast<std::size_t>(i)], window, labels);
    for (std::size_t j = 0; j < f.size(); ++j) m(i, static_cast<Eigen::Index>(j)) = f[j];
  }
  return m;
}

BenchmarkRow run_benchmark(const TemporalDataset& dataset, const BenchmarkConfig& config) {
  const std::size_t n = dataset.labeling.num_nodes();
  const TemporalSplit outer = temporal_split(dataset.stream, config.train_fraction);
  const TemporalSplit inner = temporal_split(outer.train, config.fit_fraction);

  const TrainingWindow fit_window(inner.train, n);
  const auto fit_candidates = generate_candidates(fit_window, inner.test);
  const auto fit_labels = positives_of(fit_candidates);
  require_two_classes(fit_labels, "fitting window");

  const TrainingWindow eval_window(outer.train, n);
  const auto eval_candidates = generate_candidates(eval_window, outer.test);
  const auto eval_labels = positives_of(eval_candidates);
  require_two_classes(eval_labels, "evaluation window");

  BenchmarkRow row;
  row.dataset = dataset.name;
  row.fit_candidates = fit_candidates.size();
  row.fit_positives = count_positive(fit_labels);
  row.test_candidates = eval_candidates.size();
  row.test_positives = count_positive(eval_labels);

  for (const bool with_labels : {false, true}) {
    const ClassLabeling* labels = with_labels ? &dataset.labeling : nullptr;
    const FeatureMatrix fit_x = extract_feature_matrix(fit_candidates, fit_window, labels);
    const LogisticModel model = train(fit_x, fit_labels, config.logistic);
    const std::vector<double> scores = model.predict(extract_feature_matrix(eval_candidates, eval_window, labels));
    const EvalResult result = evaluate(scores, eval_labels, config.bootstrap_trials, config.seed);
    const double loss = regularized_log_loss(model, fit_x, fit_labels);
    (with_labels ? row.with_labels : row.without_labels) = result;
    (with_labels ? row.fit_loss_with : row.fit_loss_without) = loss;
  }

  row.simplicial_score = score_or_nan([&] { return simplicial_score(eval_window.complex(), dataset.labeling, 2); });
  std::vector<Simplex> records;
  records.reserve(outer.train.size());
  for (const auto& r : outer.train) records.push_back(r.simplex);
  const Hypergraph h = Hypergraph::from_records(records, n);
  row.hypergraph_score = score_or_nan([&] { return hypergraph_score(h, dataset.labeling, 3); });
  return row;
}

TemporalDataset ssbm_stream(const SimplicialComplex& complex, const ClassLabeling& labeling, std::uint64_t seed) {
  TemporalDataset out{"ssbm", {}, labeling};
  for (int d = 1; d <= std::min(2, complex.max_dimension()); ++d) {
    const GroupView layer = complex.simplices(d);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const auto v = layer[i];
      // Stream keys must not collide with the generator's edge/fill keys, or a record's
      // time would equal the uniform that admitted it and correlate with its classes.
      const double t = d == 1 ? keyed_uniform(seed, {kEdgeTime, v[0], v[1]})
                              : keyed_uniform(seed, {kTriangleTime, v[0], v[1], v[2]});
      out.stream.push_back({Simplex(std::vector<NodeId>(v.begin(), v.end())), t});
    }
  }
  std::stable_sort(out.stream.begin(), out.stream.end(),
                   [](const TimestampedSimplex& a, const TimestampedSimplex& b) { return a.time < b.time; });
  return out;
}

}  // namespace simphom
