#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "simphom/enumerate.hpp"
#include "simphom/errors.hpp"
#include "simphom/homophily.hpp"
#include "simphom/ssbm.hpp"

using namespace simphom;

namespace {

SsbmParams params(std::vector<std::size_t> sizes, double p1, double q1, double p2, double q2, std::uint64_t seed) {
  SsbmParams p;
  p.community_sizes = std::move(sizes);
  p.p1 = p1;
  p.q1 = q1;
  p.p2 = p2;
  p.q2 = q2;
  p.seed = seed;
  return p;
}

}  // namespace

TEST_CASE("no edges when p1 = q1 = 0") {
  const SsbmSample s = generate(params({20, 20}, 0, 0, 1, 1, 3));
  CHECK(s.complex.count(0) == 40);
  CHECK(s.complex.count(1) == 0);
  CHECK(s.complex.count(2) == 0);
}

TEST_CASE("complete and fully filled when every probability is 1") {
  const SsbmSample s = generate(params({10, 10}, 1, 1, 1, 1, 3));
  CHECK(s.complex.count(1) == 190);
  CHECK(s.complex.count(2) == 1140);
  CHECK(s.labeling.class_count(0) == 10);
  CHECK(s.labeling.class_count(1) == 10);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(generate(params({10}, 1.5, 0, 0, 0, 1)), DomainError);
  CHECK_THROWS_AS(generate(params({0, 0}, 0.5, 0, 0, 0, 1)), DomainError);
}

TEST_CASE("same seed, same sample; different seed, different sample") {
  const auto p = params({50, 50}, 0.3, 0.1, 0.6, 0.2, 99);
  const SsbmSample a = generate(p);
  const SsbmSample b = generate(p);
  CHECK(a.complex == b.complex);
  CHECK(a.labeling == b.labeling);
  auto q = p;
  q.seed = 100;
  CHECK_FALSE(generate(q).complex == a.complex);
  CHECK(is_downward_closed(a.complex));
}

TEST_CASE("fill fraction concentrates at 0.5 on the complete graph") {
  // sizes (200, 200) with every edge present: C(400, 3) closed triangles.
  const SsbmSample s = generate(params({200, 200}, 1, 1, 0.5, 0.5, 17));
  const double closed = 400.0 * 399.0 * 398.0 / 6.0;
  const double filled = static_cast<double>(s.complex.count(2));
  const double sigma = std::sqrt(closed * 0.25);
  CHECK(std::abs(filled - 0.5 * closed) < 3 * sigma);
}

TEST_CASE("conditional fill rates match p2 and q2") {
  const SsbmSample s = generate(params({80, 80}, 0.3, 0.1, 0.7, 0.2, 5));
  const auto triples = oracle::all_closed_triples(s.complex);
  double hom_closed = 0, hom_filled = 0, het_closed = 0, het_filled = 0;
  for (const auto& t : triples) {
    const bool filled = oracle::in_layer(s.complex, t);
    if (oracle::all_same_class(t, s.labeling)) {
      ++hom_closed;
      hom_filled += filled;
    } else {
      ++het_closed;
      het_filled += filled;
    }
  }
  REQUIRE(hom_closed > 100);
  REQUIRE(het_closed > 100);
  CHECK(std::abs(hom_filled / hom_closed - 0.7) < 3 * std::sqrt(0.7 * 0.3 / hom_closed));
  CHECK(std::abs(het_filled / het_closed - 0.2) < 3 * std::sqrt(0.2 * 0.8 / het_closed));
}

TEST_CASE("null model: both scores average to one") {
  std::vector<double> hyper, simp;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SsbmSample s = generate(params({60, 60}, 0.2, 0.2, 0.5, 0.5, seed));
    hyper.push_back(hypergraph_score(s.complex.simplices(2), s.labeling).score_value());
    simp.push_back(simplicial_score(s.complex, s.labeling, 2).score_value());
  }
  const MeanCi h = normal_ci(hyper);
  const MeanCi x = normal_ci(simp);
  INFO("hypergraph " << h.mean << " [" << h.lo << ", " << h.hi << "]");
  INFO("simplicial " << x.mean << " [" << x.lo << ", " << x.hi << "]");
  CHECK(h.lo <= 1.0);
  CHECK(h.hi >= 1.0);
  CHECK(x.lo <= 1.0);
  CHECK(x.hi >= 1.0);
}

TEST_CASE("normal_ci") {
  const MeanCi ci = normal_ci({1.0, 2.0, 3.0});
  CHECK(ci.mean == doctest::Approx(2.0));
  CHECK(ci.hi - ci.mean == doctest::Approx(1.96 / std::sqrt(3.0)));
}

TEST_CASE("sweeps reject too few trials and report both metrics per ratio") {
  SweepConfig c = default_left_sweep();
  c.trials = 1;
  CHECK_THROWS_AS(sweep_experiment_left(c), DomainError);

  c = default_left_sweep();
  c.community_sizes = {40, 40};
  c.q1 = 0.2;
  c.ratios = {1.0, 4.0};
  c.trials = 4;
  const auto pts = sweep_experiment_left(c);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].metric == "hypergraph_g3");
  CHECK(pts[1].metric == "simplicial_k2");
  CHECK(pts[0].trials + pts[0].dropped == 4);
  // Deterministic given the seed.
  const auto again = sweep_experiment_left(c);
  CHECK(again[3].mean == pts[3].mean);

  c.ratios = {10.0};
  CHECK_THROWS_AS(sweep_experiment_left(c), DomainError);
}

TEST_CASE("hypergraph score grows with p1/q1 when fills ignore labels") {
  SweepConfig c = default_left_sweep();
  c.community_sizes = {80, 80};
  c.q1 = 0.05;
  c.ratios = {1.0, 2.0, 4.0, 8.0};
  c.trials = 10;
  const auto pts = sweep_experiment_left(c);
  double prev = 0;
  for (const auto& p : pts) {
    if (p.metric != "hypergraph_g3") continue;
    CHECK(p.mean > prev);
    prev = p.mean;
  }
}
