#include "simphom/homophily.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "simphom/errors.hpp"

namespace simphom {
namespace {

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

void finish_score(ScoreReport& r) {
  if (r.baseline == 0) {
    if (r.affinity == 0) throw UndefinedScore("affinity and baseline are both zero");
    r.infinite = true;
    return;
  }
  r.score = r.affinity / r.baseline;
}

std::string class_label(ClassId c) { return "class " + std::to_string(c); }

void require_class(const ClassLabeling& labeling, ClassId c) {
  if (c >= labeling.num_classes()) throw DomainError("unknown " + class_label(c));
}

// Slot-weighted type counts: sum_i i * count(c, i).
std::uint64_t slot_total(const GroupTally& tally, ClassId c) {
  std::uint64_t sum = 0;
  for (std::size_t i = 1; i <= tally.group_size; ++i) sum += i * tally.count(c, i);
  return sum;
}

std::optional<Rational> maybe_type_affinity(const GroupTally& tally, ClassId c, std::size_t t) {
  const std::uint64_t den = slot_total(tally, c);
  if (den == 0) return std::nullopt;
  return Rational(BigInt(t) * tally.count(c, t), BigInt(den));
}

void fill_score(TypeEntry& e) {
  if (!e.affinity || !e.baseline) return;
  if (*e.baseline == 0) {
    e.infinite = *e.affinity != 0;
    return;
  }
  e.score = *e.affinity / *e.baseline;
}

}  // namespace

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

double ScoreReport::score_value() const {
  if (infinite) return std::numeric_limits<double>::infinity();
  return score ? to_double(*score) : std::numeric_limits<double>::quiet_NaN();
}

Rational affinity(GroupView groups, const ClassLabeling& labeling) {
  if (groups.empty()) throw UndefinedScore("affinity of an empty group collection");
  const GroupTally tally = tally_groups(groups, labeling);
  return Rational(BigInt(tally.homogeneous), BigInt(tally.total));
}

Rational affinity(std::span<const Simplex> groups, const ClassLabeling& labeling) {
  if (groups.empty()) throw UndefinedScore("affinity of an empty group collection");
  std::uint64_t homogeneous = 0;
  for (const Simplex& s : groups) homogeneous += is_homogeneous(s, labeling) ? 1 : 0;
  return Rational(BigInt(homogeneous), BigInt(groups.size()));
}

Rational hypergraph_baseline(const ClassLabeling& labeling, std::size_t g) {
  const std::size_t n = labeling.num_nodes();
  if (g < 1 || g > n) {
    throw DomainError("group size " + std::to_string(g) + " outside [1, " + std::to_string(n) + "]");
  }
  BigInt num = 0;
  for (std::size_t nc : labeling.class_counts()) num += binomial(nc, g);
  return ratio(num, binomial(n, g));
}

ScoreReport hypergraph_score(GroupView groups, const ClassLabeling& labeling) {
  const std::size_t g = groups.group_size();
  if (groups.empty()) throw UndefinedScore("no hyperedges of size " + std::to_string(g));
  const std::size_t n = labeling.num_nodes();
  if (g > n) throw DomainError("group size exceeds node count");

  ScoreReport r;
  const GroupTally tally = tally_groups(groups, labeling);
  r.homogeneous = tally.homogeneous;
  r.total = tally.total;
  r.affinity = Rational(BigInt(tally.homogeneous), BigInt(tally.total));
  r.baseline_numerator = 0;
  for (std::size_t nc : labeling.class_counts()) r.baseline_numerator += binomial(nc, g);
  r.baseline_denominator = binomial(n, g);
  if (r.baseline_numerator == 0) {
    throw UndefinedScore("hypergraph baseline is zero: every class has fewer than " + std::to_string(g) +
                         " nodes");
  }
  r.baseline = ratio(r.baseline_numerator, r.baseline_denominator);
  r.score = r.affinity / r.baseline;
  return r;
}

ScoreReport hypergraph_score(const Hypergraph& h, const ClassLabeling& labeling, std::size_t g) {
  if (h.edges(g).empty()) throw UndefinedScore("no hyperedges of size " + std::to_string(g));
  return hypergraph_score(h.edges(g), labeling);
}

Rational simplicial_baseline(const SimplicialComplex& complex, const ClassLabeling& labeling, int k) {
  const GroupTally potential = tally_potential_k_simplices(complex, labeling, k);
  if (potential.total == 0) throw UndefinedScore("no potential " + std::to_string(k) + "-simplices");
  return Rational(BigInt(potential.homogeneous), BigInt(potential.total));
}

ScoreReport simplicial_score(const SimplicialComplex& complex, const ClassLabeling& labeling, int k) {
  if (k < 1) throw DomainError("simplicial score needs k >= 1, got " + std::to_string(k));
  const GroupView observed = complex.simplices(k);
  if (observed.empty()) throw UndefinedScore("complex has no " + std::to_string(k) + "-simplices");

  ScoreReport r;
  const GroupTally tally = tally_groups(observed, labeling);
  r.homogeneous = tally.homogeneous;
  r.total = tally.total;
  r.affinity = Rational(BigInt(tally.homogeneous), BigInt(tally.total));

  const GroupTally potential = tally_potential_k_simplices(complex, labeling, k);
  if (potential.total == 0) throw UndefinedScore("no potential " + std::to_string(k) + "-simplices");
  r.baseline_numerator = potential.homogeneous;
  r.baseline_denominator = potential.total;
  r.baseline = ratio(r.baseline_numerator, r.baseline_denominator);
  finish_score(r);
  return r;
}

Rational type_affinity(const GroupTally& tally, ClassId c, std::size_t t) {
  if (c >= tally.by_type.size()) throw DomainError("unknown " + class_label(c));
  if (t < 1 || t > tally.group_size) {
    throw DomainError("type " + std::to_string(t) + " outside [1, " + std::to_string(tally.group_size) + "]");
  }
  auto a = maybe_type_affinity(tally, c, t);
  if (!a) throw UndefinedScore(class_label(c) + " occurs in no group of size " + std::to_string(tally.group_size));
  return *a;
}

Rational type_affinity(GroupView groups, ClassId c, std::size_t t, const ClassLabeling& labeling) {
  require_class(labeling, c);
  return type_affinity(tally_groups(groups, labeling), c, t);
}

Rational hetero_hypergraph_baseline(const ClassLabeling& labeling, ClassId c, std::size_t t, std::size_t g) {
  require_class(labeling, c);
  const std::size_t n = labeling.num_nodes();
  const std::size_t nc = labeling.class_count(c);
  if (nc == 0) throw DomainError(class_label(c) + " has no nodes");
  if (g < 1 || g > n) {
    throw DomainError("group size " + std::to_string(g) + " outside [1, " + std::to_string(n) + "]");
  }
  if (t < 1 || t > g) return 0;
  const BigInt num = binomial(nc - 1, t - 1) * binomial(n - nc, g - t);
  return ratio(num, binomial(n - 1, g - 1));
}

Rational hetero_simplicial_baseline(const SimplicialComplex& complex, const ClassLabeling& labeling, ClassId c,
                                    std::size_t t, int k) {
  require_class(labeling, c);
  const GroupTally potential = tally_potential_k_simplices(complex, labeling, k);
  if (t < 1 || t > potential.group_size) {
    throw DomainError("type " + std::to_string(t) + " outside [1, " + std::to_string(potential.group_size) + "]");
  }
  auto b = maybe_type_affinity(potential, c, t);
  if (!b) throw UndefinedScore(class_label(c) + " is in no potential " + std::to_string(k) + "-simplex");
  return *b;
}

double TypeEntry::affinity_value() const {
  return affinity ? to_double(*affinity) : std::numeric_limits<double>::quiet_NaN();
}

double TypeEntry::baseline_value() const {
  return baseline ? to_double(*baseline) : std::numeric_limits<double>::quiet_NaN();
}

double TypeEntry::score_value() const {
  if (infinite) return std::numeric_limits<double>::infinity();
  return score ? to_double(*score) : std::numeric_limits<double>::quiet_NaN();
}

TypeProfile hetero_hypergraph_scores(GroupView groups, const ClassLabeling& labeling, ClassId c) {
  require_class(labeling, c);
  const std::size_t g = groups.group_size();
  TypeProfile profile{c, g, {}};
  const GroupTally tally = tally_groups(groups, labeling);
  const bool has_baseline = labeling.class_count(c) > 0 && g >= 1 && g <= labeling.num_nodes();
  for (std::size_t t = 1; t <= g; ++t) {
    TypeEntry e;
    e.t = t;
    e.count = tally.count(c, t);
    e.affinity = maybe_type_affinity(tally, c, t);
    if (has_baseline) e.baseline = hetero_hypergraph_baseline(labeling, c, t, g);
    fill_score(e);
    profile.entries.push_back(std::move(e));
  }
  return profile;
}

TypeProfile hetero_hypergraph_scores(const Hypergraph& h, const ClassLabeling& labeling, ClassId c, std::size_t g) {
  GroupView groups = h.edges(g);
  if (groups.group_size() == 0) groups = GroupView({}, g);
  return hetero_hypergraph_scores(groups, labeling, c);
}

TypeProfile hetero_simplicial_scores(const SimplicialComplex& complex, const ClassLabeling& labeling, ClassId c,
                                     int k) {
  require_class(labeling, c);
  if (k < 1) throw DomainError("simplicial score needs k >= 1, got " + std::to_string(k));
  const std::size_t g = static_cast<std::size_t>(k) + 1;
  TypeProfile profile{c, g, {}};
  GroupView observed = complex.simplices(k);
  if (observed.group_size() == 0) observed = GroupView({}, g);
  const GroupTally tally = tally_groups(observed, labeling);
  const GroupTally potential = tally_potential_k_simplices(complex, labeling, k);
  for (std::size_t t = 1; t <= g; ++t) {
    TypeEntry e;
    e.t = t;
    e.count = tally.count(c, t);
    e.affinity = maybe_type_affinity(tally, c, t);
    e.baseline = maybe_type_affinity(potential, c, t);
    fill_score(e);
    profile.entries.push_back(std::move(e));
  }
  return profile;
}

}  // namespace simphom
