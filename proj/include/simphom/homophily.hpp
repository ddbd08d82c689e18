#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simphom/complex.hpp"
#include "simphom/enumerate.hpp"
#include "simphom/hypergraph.hpp"
#include "simphom/labeling.hpp"

namespace simphom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

/// C(n, k) exactly; zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Affinity over baseline, with the counts behind both ratios.
///
/// `score` is empty when the ratio is infinite (a zero baseline under a nonzero affinity);
/// `infinite` is then set.
struct ScoreReport {
  Rational affinity;
  Rational baseline;
  std::optional<Rational> score;
  bool infinite = false;

  std::uint64_t homogeneous = 0;
  std::uint64_t total = 0;
  BigInt baseline_numerator;
  BigInt baseline_denominator;

  double affinity_value() const { return to_double(affinity); }
  double baseline_value() const { return to_double(baseline); }
  /// +inf when `infinite`.
  double score_value() const;
};

// Homogeneous-group scores.

/// Fraction of homogeneous groups. Throws UndefinedScore for an empty collection.
Rational affinity(GroupView groups, const ClassLabeling& labeling);
Rational affinity(std::span<const Simplex> groups, const ClassLabeling& labeling);

/// Probability that a uniformly random g-subset of the n labeled nodes is homogeneous.
/// Throws DomainError unless 1 <= g <= n.
Rational hypergraph_baseline(const ClassLabeling& labeling, std::size_t g);

/// a^g / b_h^g over the size-g groups. Throws UndefinedScore for no groups or a zero
/// baseline (every class smaller than g).
ScoreReport hypergraph_score(GroupView groups, const ClassLabeling& labeling);
ScoreReport hypergraph_score(const Hypergraph& h, const ClassLabeling& labeling, std::size_t g);

/// Homogeneous fraction of the potential k-simplices of the (k-1)-skeleton.
/// Throws UndefinedScore when there are none.
Rational simplicial_baseline(const SimplicialComplex& complex, const ClassLabeling& labeling, int k);

/// a^{k+1}(X) / b_x^k(X). Throws UndefinedScore when X^k is empty or both ratios vanish.
ScoreReport simplicial_score(const SimplicialComplex& complex, const ClassLabeling& labeling, int k);

// Heterogeneous (type-t) scores for one class.

/// t |H^{t,g}_c| / sum_i i |H^{i,g}_c| over groups of size g. Throws UndefinedScore when
/// class c occurs in none of the groups, DomainError for t outside 1..g or an unknown class.
Rational type_affinity(GroupView groups, ClassId c, std::size_t t, const ClassLabeling& labeling);
Rational type_affinity(const GroupTally& tally, ClassId c, std::size_t t);

/// C(n_c - 1, t - 1) C(n - n_c, g - t) / C(n - 1, g - 1): the chance that a random size-g
/// group holding a fixed class-c node has exactly t class-c members. Zero outside the
/// support. Throws DomainError for an unknown or empty class, or g outside 1..n.
Rational hetero_hypergraph_baseline(const ClassLabeling& labeling, ClassId c, std::size_t t, std::size_t g);

/// type_affinity over the potential k-simplices. Throws UndefinedScore when class c is in
/// none of them.
Rational hetero_simplicial_baseline(const SimplicialComplex& complex, const ClassLabeling& labeling, ClassId c,
                                    std::size_t t, int k);

struct TypeEntry {
  std::size_t t = 0;
  std::uint64_t count = 0;  ///< |H^{t,g}_c| among the observed groups
  std::optional<Rational> affinity;
  std::optional<Rational> baseline;
  std::optional<Rational> score;
  bool infinite = false;

  double affinity_value() const;
  double baseline_value() const;
  /// NaN when undefined, +inf when infinite.
  double score_value() const;
  bool defined() const { return score.has_value() || infinite; }
};

/// Per-t profile for one class, t = 1..g. Undefined entries are left empty rather than
/// thrown, since rare classes routinely produce empty strata.
struct TypeProfile {
  ClassId cls = 0;
  std::size_t group_size = 0;
  std::vector<TypeEntry> entries;
};

/// Observed type affinities against the node-label baseline.
TypeProfile hetero_hypergraph_scores(GroupView groups, const ClassLabeling& labeling, ClassId c);
TypeProfile hetero_hypergraph_scores(const Hypergraph& h, const ClassLabeling& labeling, ClassId c,
                                     std::size_t g);

/// Type affinities of X^k against those of the potential k-simplices.
TypeProfile hetero_simplicial_scores(const SimplicialComplex& complex, const ClassLabeling& labeling, ClassId c,
                                     int k);

}  // namespace simphom
