#pragma once

// Potential k-simplex enumeration and per-class tallies over group sets.
//
// Each kernel comes in a serial reference form and an OpenMP form. Both produce the same
// canonical output (lexicographic order) or the same integer tallies, independent of the
// thread count.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "simphom/complex.hpp"
#include "simphom/labeling.hpp"
#include "simphom/simplex.hpp"

namespace simphom {

using Triangle = std::array<NodeId, 3>;

/// Closed triangles of the 1-skeleton, each once, sorted. Degree-ordered orientation:
/// a triangle is reported from its lowest (degree, id) vertex.
std::vector<Triangle> closed_triangles_serial(const SimplicialComplex& complex);
std::vector<Triangle> closed_triangles(const SimplicialComplex& complex);
std::uint64_t count_closed_triangles_serial(const SimplicialComplex& complex);
std::uint64_t count_closed_triangles(const SimplicialComplex& complex);

/// Calls `visit` once per closed triangle (sorted ids), in no particular order.
void for_each_closed_triangle(const SimplicialComplex& complex,
                              const std::function<void(const Triangle&)>& visit);

/// Every (k+1)-node set whose k-subsets are all (k-1)-simplices of X, in lexicographic
/// order. Filled candidates (members of X^k) are included. k = 2 uses the triangle
/// kernel, k = 1 lists all vertex pairs, k >= 3 extends (k-1)-simplices by common
/// neighbors and checks the remaining faces. Throws DomainError for k < 1.
GroupList enumerate_potential_k_simplices(const SimplicialComplex& complex, int k);
GroupList enumerate_potential_k_simplices_serial(const SimplicialComplex& complex, int k);

/// The recursive-extension route for any k >= 1, exposed so tests can compare it
/// against the triangle kernel at k = 2.
GroupList extend_potential_k_simplices(const SimplicialComplex& complex, int k);

/// Class composition of a set of groups of one size g.
struct GroupTally {
  std::size_t group_size = 0;
  std::uint64_t total = 0;
  std::uint64_t homogeneous = 0;
  /// by_type[c][t]: groups with exactly t members of class c, t = 1..g. Slot 0 is not
  /// maintained (it would cost O(m) per group); use count(c, 0).
  std::vector<std::vector<std::uint64_t>> by_type;

  GroupTally() = default;
  GroupTally(std::size_t g, std::size_t num_classes);
  void add(std::span<const NodeId> group, const ClassLabeling& labeling);
  void merge(const GroupTally& other);
  std::uint64_t count(ClassId c, std::size_t t) const;

  friend bool operator==(const GroupTally&, const GroupTally&) = default;
};

GroupTally tally_groups_serial(GroupView groups, const ClassLabeling& labeling);
GroupTally tally_groups(GroupView groups, const ClassLabeling& labeling);

/// Tally of the potential k-simplices without materialising them (except for k >= 3).
/// For k = 1 the tally is computed in closed form from the classes of X^0.
GroupTally tally_potential_k_simplices_serial(const SimplicialComplex& complex,
                                              const ClassLabeling& labeling, int k);
GroupTally tally_potential_k_simplices(const SimplicialComplex& complex,
                                       const ClassLabeling& labeling, int k);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace simphom
