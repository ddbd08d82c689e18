#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "simphom/errors.hpp"
#include "simphom/homophily.hpp"

using namespace simphom;

namespace {

GroupList groups_of(std::size_t g, std::initializer_list<std::initializer_list<NodeId>> rows) {
  GroupList out(g);
  for (auto row : rows) {
    std::vector<NodeId> v(row);
    std::sort(v.begin(), v.end());
    out.push_back(v);
  }
  return out;
}

SimplicialComplex graph_complex(const std::vector<Simplex>& records, std::size_t n) {
  BuildOptions options;
  options.num_nodes = n;
  return build_complex(records, options);
}

}  // namespace

TEST_CASE("homophily example: golden ratios") {
  const SimplicialComplex x = fixtures::homophily_example();
  const ClassLabeling labels = fixtures::homophily_example_labels();

  CHECK(affinity(x.simplices(2), labels) == Rational(2, 3));
  CHECK(hypergraph_baseline(labels, 3) == Rational(1, 7));
  CHECK(simplicial_baseline(x, labels, 2) == Rational(2, 3));

  const ScoreReport s = simplicial_score(x, labels, 2);
  REQUIRE(s.score);
  CHECK(*s.score == 1);
  CHECK(s.homogeneous == 2);
  CHECK(s.total == 3);
  CHECK(s.baseline_numerator == 4);
  CHECK(s.baseline_denominator == 6);
  CHECK(*s.score * s.baseline == s.affinity);

  const ScoreReport h = hypergraph_score(x.simplices(2), labels);
  REQUIRE(h.score);
  CHECK(*h.score == Rational(14, 3));
  CHECK(h.score_value() > 1.0);
}

TEST_CASE("affinity") {
  const ClassLabeling one_class({0, 0, 0, 0}, 2);
  CHECK(affinity(groups_of(2, {{0, 1}, {2, 3}}), one_class) == 1);
  CHECK_THROWS_AS(affinity(GroupView({}, 3), one_class), UndefinedScore);

  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 20; ++rep) {
    const ClassLabeling labels = oracle::random_labels(12, 3, rng);
    GroupList groups(3);
    std::vector<oracle::Group> plain;
    std::uniform_int_distribution<NodeId> node(0, 11);
    while (groups.size() < 15) {
      std::vector<NodeId> g{node(rng), node(rng), node(rng)};
      std::sort(g.begin(), g.end());
      if (std::adjacent_find(g.begin(), g.end()) != g.end()) continue;
      groups.push_back(g);
      plain.push_back(g);
    }
    std::size_t hom = 0;
    for (const auto& g : plain) hom += oracle::all_same_class(g, labels);
    CHECK(affinity(groups, labels) == Rational(static_cast<long>(hom), 15));
    CHECK(affinity(groups.to_simplices(), labels) == Rational(static_cast<long>(hom), 15));
  }
}

TEST_CASE("hypergraph_baseline") {
  CHECK(hypergraph_baseline(ClassLabeling({0, 0, 0, 0, 1, 1, 1, 1}, 2), 3) == Rational(1, 7));
  CHECK(hypergraph_baseline(ClassLabeling({0, 0, 0, 0}, 2), 3) == 1);
  CHECK_THROWS_AS(hypergraph_baseline(ClassLabeling({0, 1}, 2), 3), DomainError);

  // n = 5 split 3/2, g = 2: enumerate all 10 pairs.
  const ClassLabeling labels({0, 0, 0, 1, 1}, 2);
  std::size_t same = 0;
  std::size_t pairs = 0;
  for (NodeId i = 0; i < 5; ++i)
    for (NodeId j = i + 1; j < 5; ++j) {
      ++pairs;
      same += labels.labels()[i] == labels.labels()[j];
    }
  CHECK(pairs == 10);
  CHECK(same == 4);
  CHECK(hypergraph_baseline(labels, 2) == Rational(static_cast<long>(same), static_cast<long>(pairs)));
}

TEST_CASE("hypergraph_score errors") {
  const ClassLabeling labels({0, 0, 1, 1}, 2);
  CHECK_THROWS_AS(hypergraph_score(GroupView({}, 2), labels), UndefinedScore);
  // Every class has 2 nodes: no homogeneous triple is possible.
  CHECK_THROWS_AS(hypergraph_score(groups_of(3, {{0, 1, 2}}), labels), UndefinedScore);
}

TEST_CASE("g = 2 hypergraph score is the classical edge homophily") {
  std::mt19937_64 rng(2);
  const auto records = oracle::random_complex_records(30, 0.2, 0.0, rng);
  const ClassLabeling labels = oracle::random_labels(30, 3, rng);
  const SimplicialComplex x = graph_complex(records, 30);
  const GroupView edges = x.simplices(1);
  std::size_t same = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) same += labels.labels()[edges[i][0]] == labels.labels()[edges[i][1]];
  std::size_t same_pairs = 0;
  for (std::size_t nc : labels.class_counts()) same_pairs += nc * (nc - 1) / 2;
  const double classical = (double(same) / double(edges.size())) / (double(same_pairs) / (30.0 * 29.0 / 2.0));
  CHECK(hypergraph_score(edges, labels).score_value() == doctest::Approx(classical).epsilon(1e-14));
}

TEST_CASE("edge scores coincide for the two baselines") {
  std::mt19937_64 rng(4);
  const std::size_t classes[] = {2, 3, 5};
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 10 + rng() % 51;
    const std::size_t m = classes[rep % 3];
    const auto records = oracle::random_complex_records(n, 0.15, 0.2, rng);
    const SimplicialComplex x = graph_complex(records, n);
    const ClassLabeling labels = oracle::random_labels(n, m, rng);
    if (x.count(1) == 0) continue;
    const ScoreReport h = hypergraph_score(x.simplices(1), labels);
    const ScoreReport s = simplicial_score(x, labels, 1);
    CHECK(h.affinity == s.affinity);
    CHECK(h.baseline == s.baseline);
    CHECK(*h.score == *s.score);
  }
}

TEST_CASE("simplicial_baseline") {
  SUBCASE("complete 1-skeleton equals the node-label baseline") {
    std::vector<Simplex> edges;
    for (NodeId i = 0; i < 9; ++i)
      for (NodeId j = i + 1; j < 9; ++j) edges.push_back(Simplex{i, j});
    const SimplicialComplex x = graph_complex(edges, 9);
    const ClassLabeling labels({0, 0, 0, 0, 1, 1, 1, 2, 2}, 3);
    CHECK(simplicial_baseline(x, labels, 2) == hypergraph_baseline(labels, 3));
    for (ClassId c = 0; c < 3; ++c)
      for (std::size_t t = 1; t <= 3; ++t)
        CHECK(hetero_simplicial_baseline(x, labels, c, t, 2) == hetero_hypergraph_baseline(labels, c, t, 3));
  }
  SUBCASE("G(30, 0.3) equals the all-triples count") {
    std::mt19937_64 rng(9);
    const auto records = oracle::random_complex_records(30, 0.3, 0.2, rng);
    const SimplicialComplex x = graph_complex(records, 30);
    const ClassLabeling labels = oracle::random_labels(30, 2, rng);
    const auto triples = oracle::all_closed_triples(x);
    std::size_t hom = 0;
    for (const auto& t : triples) hom += oracle::all_same_class(t, labels);
    CHECK(simplicial_baseline(x, labels, 2) ==
          Rational(static_cast<long>(hom), static_cast<long>(triples.size())));

    for (ClassId c = 0; c < 2; ++c) {
      std::vector<long> by_t(4, 0);
      long slots = 0;
      for (const auto& t : triples) {
        const std::size_t k = oracle::members_of(t, c, labels);
        by_t[k] += 1;
        slots += static_cast<long>(k);
      }
      for (std::size_t t = 1; t <= 3; ++t) {
        CHECK(hetero_simplicial_baseline(x, labels, c, t, 2) == Rational(static_cast<long>(t) * by_t[t], slots));
      }
    }
  }
  SUBCASE("no potential simplices") {
    const std::vector<Simplex> path{Simplex{0, 1}, Simplex{1, 2}};
    const SimplicialComplex x = graph_complex(path, 3);
    const ClassLabeling labels({0, 1, 0}, 2);
    CHECK_THROWS_AS(simplicial_baseline(x, labels, 2), UndefinedScore);
    CHECK_THROWS_AS(simplicial_score(x, labels, 2), UndefinedScore);
  }
}

TEST_CASE("type_affinity") {
  // Classes A = 0, B = 1.
  const ClassLabeling labels({0, 0, 0, 0, 0, 0, 1, 1, 1, 1}, 2);
  const GroupList groups = groups_of(3, {{0, 1, 2}, {3, 4, 6}, {5, 7, 8}});
  // Class A slots: 3 + 2 + 1 = 6.
  CHECK(type_affinity(groups, 0, 1, labels) == Rational(1, 6));
  CHECK(type_affinity(groups, 0, 2, labels) == Rational(1, 3));
  CHECK(type_affinity(groups, 0, 3, labels) == Rational(1, 2));
  CHECK_THROWS_AS(type_affinity(groups, 0, 0, labels), DomainError);
  CHECK_THROWS_AS(type_affinity(groups, 0, 4, labels), DomainError);

  const GroupList only_b = groups_of(3, {{6, 7, 8}});
  CHECK_THROWS_AS(type_affinity(only_b, 0, 1, labels), UndefinedScore);
  CHECK(type_affinity(only_b, 1, 3, labels) == 1);
  CHECK(type_affinity(only_b, 1, 2, labels) == 0);

  const ClassLabeling three({0, 1, 2}, 3);
  CHECK(type_affinity(groups_of(3, {{0, 1, 2}}), 1, 1, three) == 1);
}

TEST_CASE("hetero_hypergraph_baseline") {
  const ClassLabeling two_two({0, 0, 1, 1}, 2);
  // Node 0's possible partners: 1 (same class), 2, 3.
  CHECK(hetero_hypergraph_baseline(two_two, 0, 2, 2) == Rational(1, 3));
  CHECK(hetero_hypergraph_baseline(two_two, 0, 1, 2) == Rational(2, 3));
  CHECK(hetero_hypergraph_baseline(two_two, 0, 3, 2) == 0);

  const ClassLabeling lone({0, 1, 1, 1, 1, 1}, 2);
  for (std::size_t g = 1; g <= 6; ++g) CHECK(hetero_hypergraph_baseline(lone, 0, 1, g) == 1);

  const ClassLabeling empty_class({0, 0, 0}, 2);
  CHECK_THROWS_AS(hetero_hypergraph_baseline(empty_class, 1, 1, 2), DomainError);
  CHECK_THROWS_AS(hetero_hypergraph_baseline(empty_class, 2, 1, 2), DomainError);
}

TEST_CASE("type distributions sum to one") {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 8 + rng() % 30;
    const std::size_t m = 2 + rng() % 4;
    const std::size_t g = 2 + rng() % 4;
    const ClassLabeling labels = oracle::random_labels(n, m, rng);
    GroupList groups(g);
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < 40; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<NodeId> grp(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(g));
      std::sort(grp.begin(), grp.end());
      groups.push_back(grp);
    }
    for (ClassId c = 0; c < m; ++c) {
      if (labels.class_count(c) == 0) continue;
      Rational base_sum = 0;
      for (std::size_t t = 1; t <= g; ++t) base_sum += hetero_hypergraph_baseline(labels, c, t, g);
      CHECK(base_sum == 1);
      const TypeProfile p = hetero_hypergraph_scores(groups, labels, c);
      if (!p.entries[0].affinity) continue;
      Rational aff_sum = 0;
      for (const auto& e : p.entries) aff_sum += *e.affinity;
      CHECK(aff_sum == 1);
    }
  }
}

TEST_CASE("heterogeneous profile on the homophily example") {
  const SimplicialComplex x = fixtures::homophily_example();
  const ClassLabeling labels = fixtures::homophily_example_labels();
  // Closed triangles for class 0: four of type 3, 234 of type 2, 345 of type 1 -> 15 slots.
  CHECK(hetero_simplicial_baseline(x, labels, 0, 3, 2) == Rational(12, 15));
  CHECK(hetero_simplicial_baseline(x, labels, 0, 2, 2) == Rational(2, 15));
  CHECK(hetero_simplicial_baseline(x, labels, 0, 1, 2) == Rational(1, 15));

  // Filled: 012 and 013 (type 3), 345 (type 1) -> 7 slots.
  const TypeProfile p = hetero_simplicial_scores(x, labels, 0, 2);
  REQUIRE(p.entries.size() == 3);
  CHECK(*p.entries[0].affinity == Rational(1, 7));
  CHECK(*p.entries[1].affinity == 0);
  CHECK(*p.entries[2].affinity == Rational(6, 7));
  CHECK(*p.entries[0].score == Rational(15, 7));
  CHECK(*p.entries[1].score == 0);
  CHECK(*p.entries[2].score == Rational(15, 14));
  CHECK(p.entries[2].count == 2);
}

TEST_CASE("fully homogeneous data scores 1/baseline at t = g") {
  const ClassLabeling labels({0, 0, 0, 0, 1, 1, 1, 1}, 2);
  const GroupList groups = groups_of(3, {{0, 1, 2}, {1, 2, 3}, {4, 5, 6}});
  const TypeProfile p = hetero_hypergraph_scores(groups, labels, 0);
  CHECK(*p.entries[2].score == 1 / hetero_hypergraph_baseline(labels, 0, 3, 3));
  CHECK(*p.entries[0].affinity == 0);
}

TEST_CASE("undefined strata are flagged, not thrown") {
  const SimplicialComplex x = fixtures::homophily_example();
  const ClassLabeling labels({0, 0, 0, 0, 1, 1, 1, 2}, 3);
  const TypeProfile p = hetero_simplicial_scores(x, labels, 2, 2);
  for (const auto& e : p.entries) {
    CHECK_FALSE(e.affinity);
    CHECK_FALSE(e.defined());
    CHECK(std::isnan(e.score_value()));
  }
}

TEST_CASE("shuffled labels: hypergraph score averages to one") {
  std::mt19937_64 rng(12);
  const std::size_t n = 60;
  std::vector<ClassId> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = static_cast<ClassId>(i % 3);
  GroupList groups(3);
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i < 300; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<NodeId> grp(perm.begin(), perm.begin() + 3);
    std::sort(grp.begin(), grp.end());
    groups.push_back(grp);
  }
  const int shuffles = 4000;
  double sum = 0;
  double sum_sq = 0;
  for (int s = 0; s < shuffles; ++s) {
    std::shuffle(base.begin(), base.end(), rng);
    const double v = hypergraph_score(groups, ClassLabeling(base, 3)).score_value();
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / shuffles;
  const double se = std::sqrt((sum_sq / shuffles - mean * mean) / shuffles);
  CHECK(std::abs(mean - 1.0) < 3 * se);
}

TEST_CASE("shuffled labels on a fixed complex: simplicial type scores average to one") {
  std::mt19937_64 rng(21);
  const std::size_t n = 60;
  const auto records = oracle::random_complex_records(n, 0.3, 0.3, rng);
  const SimplicialComplex x = graph_complex(records, n);
  std::vector<ClassId> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = static_cast<ClassId>(i % 2);
  const int shuffles = 400;
  std::vector<double> sum(3, 0), sum_sq(3, 0);
  for (int s = 0; s < shuffles; ++s) {
    std::shuffle(base.begin(), base.end(), rng);
    const TypeProfile p = hetero_simplicial_scores(x, ClassLabeling(base, 2), 0, 2);
    for (std::size_t t = 0; t < 3; ++t) {
      const double v = p.entries[t].score_value();
      sum[t] += v;
      sum_sq[t] += v * v;
    }
  }
  for (std::size_t t = 0; t < 3; ++t) {
    const double mean = sum[t] / shuffles;
    const double se = std::sqrt((sum_sq[t] / shuffles - mean * mean) / shuffles);
    INFO("t = " << t + 1 << " mean " << mean << " se " << se);
    CHECK(std::abs(mean - 1.0) < 3 * se);
  }
}
