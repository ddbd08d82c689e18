#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "simphom/errors.hpp"
#include "simphom/homophily.hpp"
#include "simphom/io.hpp"
#include "simphom/linkpred.hpp"
#include "simphom/ssbm.hpp"
#include "simphom/stats.hpp"

using namespace simphom;
using nlohmann::json;

namespace {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kIo = 3, kUndefined = 4, kTypedError = 5 };

// Shortest representation that parses back to the same double, always with a decimal
// point or exponent so readers see a real.
std::string real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::string s = fmt::format("{}", v);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

json json_real(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string rational(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file", path);
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void write_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file", path);
  out << doc.dump(2) << '\n';
}

struct Outputs {
  std::string csv;
  std::string json;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--csv", csv, "Write results as CSV to this path");
    cmd->add_option("--json", json, "Write results and parameters as JSON to this path");
  }
  void emit(const Table& table, const nlohmann::json& doc) const {
    if (!csv.empty()) table.write_csv(csv);
    if (!json.empty()) write_json(json, doc);
  }
};

struct DataArgs {
  std::string prefix;
  std::string edges;
  std::string labels;

  void add_to(CLI::App* cmd) {
    auto* data = cmd->add_option("--data", prefix, "Dataset prefix (PREFIX-nverts.txt, -simplices.txt, -times.txt)");
    cmd->add_option("--edges", edges, "Edge list file (u v [time] per line)")->excludes(data);
    cmd->add_option("--labels", labels, "Node label file (default PREFIX-node-labels.txt)");
  }
  DatasetBundle load() const {
    if (!edges.empty()) {
      if (labels.empty()) throw CLI::RequiredError("--labels is required with --edges");
      return load_edge_list_with_labels(edges, labels);
    }
    if (prefix.empty()) throw CLI::RequiredError("--data or --edges");
    auto paths = SimplexDatasetPaths::from_prefix(prefix);
    if (!labels.empty()) paths.labels = labels;
    return load_simplex_dataset(paths);
  }
};

ClassId resolve_class(const ClassLabeling& labeling, const std::string& name) {
  try {
    return labeling.class_by_name(name);
  } catch (const DomainError&) {
    // Fall back to a numeric class index.
    unsigned long c = 0;
    const auto [end, ec] = std::from_chars(name.data(), name.data() + name.size(), c);
    if (ec != std::errc() || end != name.data() + name.size() || c >= labeling.num_classes()) {
      throw DomainError("unknown class '" + name + "'");
    }
    return static_cast<ClassId>(c);
  }
}

struct ScoreArgs {
  DataArgs data;
  Outputs out;
  int k = 2;
  std::size_t g = 0;
};

int run_score(const ScoreArgs& a) {
  const DatasetBundle b = a.data.load();
  const std::size_t g = a.g ? a.g : static_cast<std::size_t>(a.k) + 1;
  Table table({"dataset", "metric", "order", "groups", "homogeneous", "affinity", "baseline", "score", "exact_score"});
  json doc{{"command", "score"}, {"dataset", b.name}, {"k", a.k}, {"g", g}, {"results", json::array()}};
  fmt::print("dataset {}: {} nodes, {} classes, {} records\n", b.name, b.num_nodes(), b.labeling.num_classes(),
             b.stream.size());
  bool undefined = false;

  auto report = [&](const std::string& metric, std::size_t order, const std::function<ScoreReport()>& f) {
    try {
      const ScoreReport r = f();
      const std::string exact = r.infinite ? "inf" : rational(*r.score);
      fmt::print("  {} {}: affinity {} = {}, baseline {} = {}, score {} ({})\n", metric, order, rational(r.affinity),
                 real(to_double(r.affinity)), rational(r.baseline), real(to_double(r.baseline)), real(r.score_value()),
                 exact);
      table.add({b.name, metric, std::to_string(order), std::to_string(r.total), std::to_string(r.homogeneous),
                 real(to_double(r.affinity)), real(to_double(r.baseline)), real(r.score_value()), exact});
      doc["results"].push_back({{"metric", metric}, {"order", order}, {"groups", r.total},
                                {"homogeneous", r.homogeneous}, {"affinity", to_double(r.affinity)},
                                {"baseline", to_double(r.baseline)}, {"score", json_real(r.score_value())},
                                {"exact_score", exact}});
    } catch (const UndefinedScore& e) {
      undefined = true;
      fmt::print("  {} {}: undefined ({})\n", metric, order, e.what());
      table.add({b.name, metric, std::to_string(order), "", "", "", "", "nan", ""});
      doc["results"].push_back({{"metric", metric}, {"order", order}, {"score", nullptr}, {"error", e.what()}});
    }
  };
  const SimplicialComplex x = b.complex(a.k);
  report("simplicial_k", static_cast<std::size_t>(a.k), [&] { return simplicial_score(x, b.labeling, a.k); });
  const Hypergraph h = b.hypergraph();
  report("hypergraph_g", g, [&] { return hypergraph_score(h, b.labeling, g); });
  a.out.emit(table, doc);
  return undefined ? kUndefined : kOk;
}

struct HeteroArgs {
  DataArgs data;
  Outputs out;
  std::string cls;
  int k = 2;
  std::size_t g = 0;
};

int run_hetero(const HeteroArgs& a) {
  const DatasetBundle b = a.data.load();
  const ClassId c = resolve_class(b.labeling, a.cls);
  const std::size_t g = a.g ? a.g : static_cast<std::size_t>(a.k) + 1;
  Table table({"dataset", "metric", "class", "t", "count", "affinity", "baseline", "score"});
  json doc{{"command", "hetero-score"}, {"dataset", b.name}, {"class", b.labeling.class_name(c)}, {"k", a.k},
           {"g", g}, {"results", json::array()}};
  fmt::print("dataset {}, class {} ({} nodes)\n", b.name, b.labeling.class_name(c), b.labeling.class_count(c));

  auto emit_profile = [&](const std::string& metric, const TypeProfile& p) {
    fmt::print("  {} (group size {}):\n", metric, p.group_size);
    for (const TypeEntry& e : p.entries) {
      const double aff = e.affinity ? to_double(*e.affinity) : std::nan("");
      const double base = e.baseline ? to_double(*e.baseline) : std::nan("");
      const double score = e.defined() ? e.score_value() : std::nan("");
      fmt::print("    t={}: count {}, affinity {}, baseline {}, score {}\n", e.t, e.count, real(aff), real(base),
                 e.defined() ? real(score) : "undefined");
      table.add({b.name, metric, b.labeling.class_name(c), std::to_string(e.t), std::to_string(e.count), real(aff),
                 real(base), real(score)});
      doc["results"].push_back({{"metric", metric}, {"t", e.t}, {"count", e.count}, {"affinity", json_real(aff)},
                                {"baseline", json_real(base)}, {"score", json_real(score)}});
    }
  };
  const SimplicialComplex x = b.complex(a.k);
  emit_profile("simplicial_k", hetero_simplicial_scores(x, b.labeling, c, a.k));
  emit_profile("hypergraph_g", hetero_hypergraph_scores(b.hypergraph(), b.labeling, c, g));
  a.out.emit(table, doc);
  return kOk;
}

struct SweepArgs {
  Outputs out;
  std::string panel = "left";
  std::size_t trials = 30;
  std::uint64_t seed = 1;
  bool paper_scale = false;
  std::vector<std::size_t> sizes;
  std::vector<double> ratios;
};

int run_sweep(const SweepArgs& a) {
  const bool left = a.panel == "left";
  SweepConfig c = left ? default_left_sweep(a.paper_scale) : default_right_sweep(a.paper_scale);
  c.trials = a.trials;
  c.seed = a.seed;
  if (!a.sizes.empty()) c.community_sizes = a.sizes;
  if (!a.ratios.empty()) c.ratios = a.ratios;
  const auto points = left ? sweep_experiment_left(c) : sweep_experiment_right(c);

  Table table({"panel", "ratio", "metric", "mean", "ci_lo", "ci_hi", "trials", "dropped"});
  json doc{{"command", "ssbm-sweep"}, {"panel", a.panel},   {"trials", c.trials},
           {"seed", c.seed},          {"sizes", c.community_sizes}, {"q1", c.q1},
           {"fill", c.fill},          {"q2", c.q2},         {"edge_ratio", c.edge_ratio},
           {"points", json::array()}};
  fmt::print("SSBM sweep, {} panel ({} ratio), sizes {}, {} trials, seed {}\n", a.panel, left ? "p1/q1" : "p2/q2",
             fmt::join(c.community_sizes, "/"), c.trials, c.seed);
  for (const auto& p : points) {
    fmt::print("  ratio {:<6} {:<14} mean {:.4f}  95% CI [{:.4f}, {:.4f}]{}\n", p.ratio, p.metric, p.mean, p.ci_lo,
               p.ci_hi, p.dropped ? fmt::format("  ({} dropped)", p.dropped) : "");
    table.add({a.panel, real(p.ratio), p.metric, real(p.mean), real(p.ci_lo), real(p.ci_hi), std::to_string(p.trials),
               std::to_string(p.dropped)});
    doc["points"].push_back({{"ratio", p.ratio}, {"metric", p.metric}, {"mean", json_real(p.mean)},
                             {"ci_lo", json_real(p.ci_lo)}, {"ci_hi", json_real(p.ci_hi)}, {"trials", p.trials},
                             {"dropped", p.dropped}});
  }
  a.out.emit(table, doc);
  return kOk;
}

struct LinkpredArgs {
  DataArgs data;
  Outputs out;
  double train_frac = 0.5;
  double fit_frac = 0.5;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  double l2 = 1e-3;
  double synthetic_ratio = 0;
  std::vector<std::size_t> sizes{100, 100};
};

int run_linkpred(const LinkpredArgs& a) {
  TemporalDataset ds;
  if (a.synthetic_ratio > 0) {
    SsbmParams p;
    p.community_sizes = a.sizes;
    p.q1 = 0.05;
    p.p1 = 0.2;
    p.q2 = 0.15;
    p.p2 = std::min(1.0, a.synthetic_ratio * p.q2);
    p.seed = a.seed;
    const SsbmSample s = generate(p);
    ds = ssbm_stream(s.complex, s.labeling, a.seed);
    ds.name = fmt::format("ssbm-ratio-{}", a.synthetic_ratio);
  } else {
    const DatasetBundle b = a.data.load();
    if (!b.timed) fmt::print(stderr, "warning: {} has no timestamps; file order is used as time\n", b.name);
    ds = b.temporal();
  }
  BenchmarkConfig config;
  config.train_fraction = a.train_frac;
  config.fit_fraction = a.fit_frac;
  config.bootstrap_trials = a.trials;
  config.seed = a.seed;
  config.logistic.l2 = a.l2;
  const BenchmarkRow r = run_benchmark(ds, config);

  Table table({"dataset", "without_labels", "without_lo", "without_hi", "with_labels", "with_lo", "with_hi",
               "simplicial_score", "hypergraph_score", "test_candidates", "test_positives"});
  table.add({r.dataset, real(r.without_labels.relative_score), real(r.without_labels.ci.lo),
             real(r.without_labels.ci.hi), real(r.with_labels.relative_score), real(r.with_labels.ci.lo),
             real(r.with_labels.ci.hi), real(r.simplicial_score), real(r.hypergraph_score),
             std::to_string(r.test_candidates), std::to_string(r.test_positives)});
  auto eval_json = [](const EvalResult& e) {
    return json{{"auc_pr", e.auc_pr}, {"random_baseline", e.random_baseline}, {"relative", e.relative_score},
                {"ci", {e.ci.lo, e.ci.hi}}};
  };
  const json doc{{"command", "linkpred"},
                 {"dataset", r.dataset},
                 {"train_frac", a.train_frac},
                 {"fit_frac", a.fit_frac},
                 {"bootstrap_trials", a.trials},
                 {"seed", a.seed},
                 {"l2", a.l2},
                 {"without_labels", eval_json(r.without_labels)},
                 {"with_labels", eval_json(r.with_labels)},
                 {"simplicial_score", json_real(r.simplicial_score)},
                 {"hypergraph_score", json_real(r.hypergraph_score)},
                 {"fit_candidates", r.fit_candidates},
                 {"fit_positives", r.fit_positives},
                 {"test_candidates", r.test_candidates},
                 {"test_positives", r.test_positives}};
  fmt::print("dataset {}: {} fitting candidates ({} positive), {} test candidates ({} positive)\n", r.dataset,
             r.fit_candidates, r.fit_positives, r.test_candidates, r.test_positives);
  fmt::print("  relative AUC-PR without labels {:.3f} [{:.3f}, {:.3f}]\n", r.without_labels.relative_score,
             r.without_labels.ci.lo, r.without_labels.ci.hi);
  fmt::print("  relative AUC-PR with labels    {:.3f} [{:.3f}, {:.3f}]\n", r.with_labels.relative_score,
             r.with_labels.ci.lo, r.with_labels.ci.hi);
  fmt::print("  training window: simplicial score {}, hypergraph score {}\n", real(r.simplicial_score),
             real(r.hypergraph_score));
  a.out.emit(table, doc);
  return kOk;
}

struct BootstrapArgs {
  DataArgs data;
  Outputs out;
  std::size_t trials = 50;
  double fraction = 0.8;
  std::uint64_t seed = 1;
  int k = 2;
  std::size_t g = 0;
  std::string cls;
};

int run_bootstrap(const BootstrapArgs& a) {
  const DatasetBundle b = a.data.load();
  const std::size_t g = a.g ? a.g : static_cast<std::size_t>(a.k) + 1;
  std::optional<ClassId> cls;
  if (!a.cls.empty()) cls = resolve_class(b.labeling, a.cls);

  std::vector<std::string> names{fmt::format("hypergraph_g{}", g), fmt::format("simplicial_k{}", a.k)};
  if (cls) {
    for (std::size_t t = 1; t <= static_cast<std::size_t>(a.k) + 1; ++t) names.push_back(fmt::format("type_t{}", t));
  }
  const int k = a.k;
  const std::vector<Simplex> records = b.simplices();
  const ScoreFunction score = [&](const Subsample& sub) {
    const SimplicialComplex& x = sub.complex;
    const ClassLabeling& l = sub.labeling;
    auto safe = [](const std::function<double()>& f) {
      try {
        return f();
      } catch (const UndefinedScore&) {
        return std::nan("");
      }
    };
    std::vector<double> out;
    const Hypergraph hg = Hypergraph::from_records(induced_records(records, sub.nodes), l.num_nodes());
    out.push_back(safe([&] { return hypergraph_score(hg, l, g).score_value(); }));
    out.push_back(safe([&] { return simplicial_score(x, l, k).score_value(); }));
    if (cls) {
      const TypeProfile p = hetero_simplicial_scores(x, l, *cls, k);
      for (const TypeEntry& e : p.entries) out.push_back(e.defined() ? e.score_value() : std::nan(""));
    }
    return out;
  };

  BootstrapSpec spec;
  spec.trials = a.trials;
  spec.node_fraction = a.fraction;
  spec.seed = a.seed;
  const SimplicialComplex x = b.complex(a.k);
  std::vector<NodeId> all(b.num_nodes());
  std::iota(all.begin(), all.end(), NodeId{0});
  const std::vector<double> full = score({x, b.labeling, all});
  const BootstrapResult r = bootstrap_scores(x, b.labeling, spec, score);

  Table table({"dataset", "quantity", "value", "mean", "std", "missing", "trials", "fraction"});
  json doc{{"command", "bootstrap"}, {"dataset", b.name}, {"trials", a.trials}, {"fraction", a.fraction},
           {"seed", a.seed},         {"k", a.k},          {"g", g},             {"quantities", json::array()}};
  fmt::print("dataset {}: {} trials keeping {} of the nodes, seed {}\n", b.name, a.trials, real(a.fraction), a.seed);
  for (std::size_t q = 0; q < names.size(); ++q) {
    fmt::print("  {:<16} {} +- {} (mean {}, {} missing)\n", names[q], real(full[q]), real(r.std_dev[q]),
               real(r.mean[q]), r.missing[q]);
    table.add({b.name, names[q], real(full[q]), real(r.mean[q]), real(r.std_dev[q]), std::to_string(r.missing[q]),
               std::to_string(r.trials), real(a.fraction)});
    doc["quantities"].push_back({{"name", names[q]}, {"value", json_real(full[q])}, {"mean", json_real(r.mean[q])},
                                 {"std", json_real(r.std_dev[q])}, {"missing", r.missing[q]}});
  }
  a.out.emit(table, doc);
  return kOk;
}

struct VarianceArgs {
  Outputs out;
  std::string input;
};

std::vector<ScorePair> read_score_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path);
  std::vector<ScorePair> pairs;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (n == 1 && !cells.empty() && cells[0] == "dataset") continue;
    if (cells.size() != 3) throw ParseError("expected dataset,graph_score,target_score", path, n);
    try {
      std::size_t p1 = 0, p2 = 0;
      const double gs = std::stod(cells[1], &p1);
      const double ts = std::stod(cells[2], &p2);
      if (p1 != cells[1].size() || p2 != cells[2].size()) throw std::invalid_argument("trailing characters");
      pairs.push_back({cells[0], gs, ts});
    } catch (const std::logic_error&) {
      throw ParseError("bad number", path, n);
    }
  }
  return pairs;
}

int run_variance(const VarianceArgs& a) {
  const auto pairs = read_score_pairs(a.input);
  const RegressionResult r = explained_variance(pairs);
  Table table({"n", "slope", "intercept", "r_squared", "p_value", "slope_stderr"});
  table.add({std::to_string(r.n), real(r.slope), real(r.intercept), real(r.r_squared), real(r.p_value),
             real(r.slope_stderr)});
  const json doc{{"command", "explained-variance"}, {"input", a.input},         {"n", r.n},
                 {"slope", r.slope},                {"intercept", r.intercept}, {"r_squared", r.r_squared},
                 {"p_value", r.p_value},            {"slope_stderr", r.slope_stderr}};
  fmt::print("log(target) = {:.4f} + {:.4f} log(graph score) over {} datasets\n", r.intercept, r.slope, r.n);
  fmt::print("  r^2 = {:.3f}, slope p-value = {:.3g}\n", r.r_squared, r.p_value);
  a.out.emit(table, doc);
  return kOk;
}

struct StatsArgs {
  Outputs out;
  std::vector<std::string> prefixes;
  std::vector<std::string> edges;
  std::vector<std::string> labels;
};

int run_stats(const StatsArgs& a) {
  if (a.prefixes.empty() && a.edges.empty()) throw CLI::RequiredError("--data or --edges");
  if (a.labels.size() != a.edges.size()) throw CLI::ValidationError("--labels", "give one labels file per --edges");
  std::vector<DatasetBundle> bundles;
  for (const auto& p : a.prefixes) bundles.push_back(load_simplex_dataset(SimplexDatasetPaths::from_prefix(p)));
  for (std::size_t i = 0; i < a.edges.size(); ++i) bundles.push_back(load_edge_list_with_labels(a.edges[i], a.labels[i]));

  Table table({"dataset", "nodes", "classes", "edges", "triangles", "time_steps", "records"});
  json doc{{"command", "stats"}, {"datasets", json::array()}};
  fmt::print("{:<24} {:>10} {:>8} {:>12} {:>12} {:>10}\n", "dataset", "nodes", "classes", "edges", "triangles",
             "times");
  for (const auto& b : bundles) {
    const DatasetStats s = dataset_stats(b);
    fmt::print("{:<24} {:>10} {:>8} {:>12} {:>12} {:>10}\n", s.name, s.nodes, s.classes, s.edges, s.triangles,
               b.timed ? std::to_string(s.time_steps) : "-");
    table.add({s.name, std::to_string(s.nodes), std::to_string(s.classes), std::to_string(s.edges),
               std::to_string(s.triangles), std::to_string(s.time_steps), std::to_string(s.records)});
    doc["datasets"].push_back({{"name", s.name}, {"nodes", s.nodes}, {"classes", s.classes}, {"edges", s.edges},
                               {"triangles", s.triangles}, {"time_steps", s.time_steps}, {"records", s.records}});
  }
  a.out.emit(table, doc);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homophily scores for simplicial complexes and hypergraphs"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);
  std::function<int()> command;

  ScoreArgs score;
  auto* s = app.add_subcommand("score", "Global simplicial and hypergraph homophily scores");
  score.data.add_to(s);
  score.out.add_to(s);
  s->add_option("--k", score.k, "Simplex dimension for the simplicial score")->check(CLI::Range(1, 16));
  s->add_option("--g", score.g, "Hyperedge size for the hypergraph score (default k+1)")->check(CLI::Range(1, 64));
  s->callback([&] { command = [&] { return run_score(score); }; });

  HeteroArgs hetero;
  auto* h = app.add_subcommand("hetero-score", "Per-type scores of one class");
  hetero.data.add_to(h);
  hetero.out.add_to(h);
  h->add_option("--class", hetero.cls, "Class name (or index)")->required();
  h->add_option("--k", hetero.k, "Simplex dimension")->check(CLI::Range(1, 16));
  h->add_option("--g", hetero.g, "Hyperedge size (default k+1)")->check(CLI::Range(1, 64));
  h->callback([&] { command = [&] { return run_hetero(hetero); }; });

  SweepArgs sweep;
  auto* w = app.add_subcommand("ssbm-sweep", "Score sweeps over simplicial stochastic block models");
  sweep.out.add_to(w);
  w->add_option("--panel", sweep.panel, "left: vary p1/q1 with label-blind fills; right: vary p2/q2")
      ->check(CLI::IsMember({"left", "right"}));
  w->add_option("--trials", sweep.trials, "Samples per ratio")->check(CLI::Range(2, 100000));
  w->add_option("--seed", sweep.seed, "Random seed");
  w->add_flag("--paper-scale", sweep.paper_scale, "Use 1000/1000 communities with q1 = 0.01");
  w->add_option("--sizes", sweep.sizes, "Community sizes");
  w->add_option("--ratios", sweep.ratios, "Ratios to sweep");
  w->callback([&] { command = [&] { return run_sweep(sweep); }; });

  LinkpredArgs lp;
  auto* l = app.add_subcommand("linkpred", "Predict which open triangles close, with and without labels");
  lp.data.add_to(l);
  lp.out.add_to(l);
  l->add_option("--train-frac", lp.train_frac, "Share of records in the training window")->check(CLI::Range(0.0, 1.0));
  l->add_option("--fit-frac", lp.fit_frac, "Share of the training window used for features when fitting")
      ->check(CLI::Range(0.0, 1.0));
  l->add_option("--trials", lp.trials, "Bootstrap resamples for the confidence intervals")->check(CLI::Range(2, 1000000));
  l->add_option("--seed", lp.seed, "Random seed");
  l->add_option("--l2", lp.l2, "L2 penalty of the logistic model")->check(CLI::PositiveNumber);
  l->add_option("--synthetic", lp.synthetic_ratio, "Use an SSBM stream with this p2/q2 instead of a dataset");
  l->add_option("--sizes", lp.sizes, "Community sizes for --synthetic");
  l->callback([&] { command = [&] { return run_linkpred(lp); }; });

  BootstrapArgs boot;
  auto* b = app.add_subcommand("bootstrap", "Node-subsampling error bars for the scores");
  boot.data.add_to(b);
  boot.out.add_to(b);
  b->add_option("--trials", boot.trials, "Number of subsamples")->check(CLI::Range(2, 1000000));
  b->add_option("--fraction", boot.fraction, "Share of nodes kept per subsample")->check(CLI::Range(0.0, 1.0));
  b->add_option("--seed", boot.seed, "Random seed");
  b->add_option("--k", boot.k, "Simplex dimension")->check(CLI::Range(1, 16));
  b->add_option("--g", boot.g, "Hyperedge size (default k+1)")->check(CLI::Range(2, 64));
  b->add_option("--class", boot.cls, "Also report per-type scores of this class");
  b->callback([&] { command = [&] { return run_bootstrap(boot); }; });

  VarianceArgs var;
  auto* v = app.add_subcommand("explained-variance", "Regress log target scores on log graph scores");
  var.out.add_to(v);
  v->add_option("--input", var.input, "CSV with columns dataset,graph_score,target_score")->required();
  v->callback([&] { command = [&] { return run_variance(var); }; });

  StatsArgs st;
  auto* t = app.add_subcommand("stats", "Dataset summary table");
  st.out.add_to(t);
  t->add_option("--data", st.prefixes, "Dataset prefixes");
  t->add_option("--edges", st.edges, "Edge list files");
  t->add_option("--labels", st.labels, "Label files, one per --edges");
  t->callback([&] { command = [&] { return run_stats(st); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return command();
  } catch (const CLI::Error& e) {
    fmt::print(stderr, "usage error: {}\n", e.what());
    return kUsage;
  } catch (const ParseError& e) {
    fmt::print(stderr, "input error: {}\n", e.what());
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    fmt::print(stderr, "input error: {}\n", e.what());
    return kIo;
  } catch (const UndefinedScore& e) {
    fmt::print(stderr, "undefined score: {}\n", e.what());
    return kUndefined;
  } catch (const Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kTypedError;
  } catch (const std::exception& e) {
    fmt::print(stderr, "unexpected failure: {}\n", e.what());
    return kFailure;
  }
}
