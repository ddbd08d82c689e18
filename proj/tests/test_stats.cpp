#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "simphom/errors.hpp"
#include "simphom/homophily.hpp"
#include "simphom/stats.hpp"

using namespace simphom;

namespace {

std::vector<double> global_scores(const Subsample& s) {
  const SimplicialComplex& x = s.complex;
  const ClassLabeling& l = s.labeling;
  return {hypergraph_score(x.simplices(2), l).score_value(), simplicial_score(x, l, 2).score_value()};
}

}  // namespace

TEST_CASE("induced subcomplex keeps exactly the simplices inside the node set") {
  std::mt19937_64 rng(2);
  const auto records = oracle::random_complex_records(30, 0.3, 0.5, rng);
  BuildOptions options;
  options.num_nodes = 30;
  const SimplicialComplex x = build_complex(records, options);
  const ClassLabeling labels = oracle::random_labels(30, 3, rng);
  const auto nodes = bootstrap_node_sample(30, 0.6, 9, 0);
  CHECK(nodes.size() == 18);
  const Subsample sub = induced_subcomplex(x, labels, nodes);
  CHECK(is_downward_closed(sub.complex));
  CHECK(sub.complex.count(0) == 18);
  std::size_t expected = 0;
  for (const auto& s : x.all_simplices()) {
    bool inside = true;
    for (NodeId v : s.vertices()) inside = inside && std::binary_search(nodes.begin(), nodes.end(), v);
    expected += inside ? 1 : 0;
  }
  CHECK(sub.complex.total_count() == expected);
  std::size_t kept_records = 0;
  for (const auto& r : records) {
    bool inside = true;
    for (NodeId v : r.vertices()) inside = inside && std::binary_search(nodes.begin(), nodes.end(), v);
    kept_records += inside ? 1 : 0;
  }
  const auto induced = induced_records(records, nodes);
  CHECK(induced.size() == kept_records);
  for (const auto& r : induced) CHECK(sub.complex.contains(r));
  for (std::size_t i = 0; i < nodes.size(); ++i) CHECK(sub.labeling.label(static_cast<NodeId>(i)) == labels.label(nodes[i]));
}

TEST_CASE("node samples are reproducible and distinct per trial") {
  CHECK(bootstrap_node_sample(100, 0.8, 3, 4) == bootstrap_node_sample(100, 0.8, 3, 4));
  CHECK_FALSE(bootstrap_node_sample(100, 0.8, 3, 4) == bootstrap_node_sample(100, 0.8, 3, 5));
  const auto all = bootstrap_node_sample(10, 1.0, 3, 0);
  CHECK(all.size() == 10);
}

TEST_CASE("bootstrap with every node kept has zero spread") {
  const SimplicialComplex x = fixtures::homophily_example();
  BootstrapSpec spec;
  spec.node_fraction = 1.0;
  spec.trials = 5;
  const auto r = bootstrap_scores(x, fixtures::homophily_example_labels(), spec, global_scores);
  CHECK(r.std_dev[0] == 0.0);
  CHECK(r.std_dev[1] == 0.0);
  CHECK(r.mean[1] == doctest::Approx(1.0));
}

TEST_CASE("bootstrap records undefined trials as missing and is deterministic") {
  const SimplicialComplex x = fixtures::homophily_example();
  BootstrapSpec spec;
  spec.node_fraction = 0.5;
  spec.trials = 40;
  const auto a = bootstrap_scores(x, fixtures::homophily_example_labels(), spec, global_scores);
  const auto b = bootstrap_scores(x, fixtures::homophily_example_labels(), spec, global_scores);
  CHECK(a.missing[0] > 0);
  CHECK(a.missing[0] < 40);
  CHECK(a.std_dev == b.std_dev);
  spec.trials = 1;
  CHECK_THROWS_AS(bootstrap_scores(x, fixtures::homophily_example_labels(), spec, global_scores), DomainError);
  spec.trials = 2;
  spec.node_fraction = 0;
  CHECK_THROWS_AS(bootstrap_scores(x, fixtures::homophily_example_labels(), spec, global_scores), DomainError);
}

TEST_CASE("ols on three hand-computable points") {
  // y = 1 + 2x exactly, then one point off the line.
  const std::vector<double> x{0, 1, 2};
  auto r = ols(x, std::vector<double>{1, 3, 5});
  CHECK(r.slope == doctest::Approx(2));
  CHECK(r.intercept == doctest::Approx(1));
  CHECK(r.r_squared == 1.0);
  CHECK(r.p_value == 0.0);
  r = ols(x, std::vector<double>{1, 3, 4});
  // slope = sxy/sxx = 3/2, intercept = 8/3 - 3/2 = 7/6, sse = 1/6, syy = 14/3.
  CHECK(r.slope == doctest::Approx(1.5));
  CHECK(r.intercept == doctest::Approx(7.0 / 6.0));
  CHECK(r.r_squared == doctest::Approx(1 - (1.0 / 6.0) / (14.0 / 3.0)));
  // t = 1.5 / sqrt(1/6 / 2), one degree of freedom: p = 1 - 2 atan(t) / pi.
  const double t = 1.5 / std::sqrt(1.0 / 12.0);
  CHECK(r.p_value == doctest::Approx(1 - 2 * std::atan(t) / M_PI));
  CHECK_THROWS_AS(ols(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}), DomainError);
  CHECK_THROWS_AS(ols(std::vector<double>{1, 2}, std::vector<double>{1, 2}), DomainError);
}

TEST_CASE("explained variance works in log space and names bad datasets") {
  std::vector<ScorePair> pairs{{"a", 1.0, 2.0}, {"b", 2.0, 8.0}, {"c", 4.0, 32.0}};
  const auto r = explained_variance(pairs);
  CHECK(r.slope == doctest::Approx(2));
  CHECK(r.intercept == doctest::Approx(std::log(2.0)));
  CHECK(r.r_squared == doctest::Approx(1.0));
  pairs.push_back({"bad-one", 0.0, 1.0});
  try {
    explained_variance(pairs);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("bad-one") != std::string::npos);
  }
}

TEST_CASE("null regressions give roughly uniform p-values") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> z;
  int below = 0;
  const int reps = 400;
  double mean_r2 = 0;
  for (int rep = 0; rep < reps; ++rep) {
    std::vector<double> x(16), y(16);
    for (auto& v : x) v = z(rng);
    for (auto& v : y) v = z(rng);
    const auto r = ols(x, y);
    below += r.p_value < 0.1;
    mean_r2 += r.r_squared / reps;
  }
  // Binomial(400, 0.1): sd 6.
  CHECK(std::abs(below - 40) < 20);
  // E[r^2] = 1/(n-1) under the null.
  CHECK(std::abs(mean_r2 - 1.0 / 15.0) < 0.02);
}
