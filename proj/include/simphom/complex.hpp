#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "simphom/simplex.hpp"

namespace simphom {

struct BuildOptions {
  /// Vertex id space. Every id below it is inserted as a 0-simplex, so isolated nodes are
  /// part of X^0. Zero means "max id seen + 1" without adding isolated vertices.
  std::size_t num_nodes = 0;
  /// Store only faces up to this dimension (the complex is then the skeleton of the full
  /// closure, which is itself a complex). Negative means unbounded.
  int max_dimension = -1;
};

/// Immutable downward-closed simplex store.
///
/// Simplices of each dimension j live in one flat, lexicographically sorted array of
/// stride j+1. The 1-skeleton is also kept as sorted CSR adjacency so that closed triangle
/// enumeration is a neighbor-intersection pass.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Size of the vertex id space; every stored id is below it.
  std::size_t num_nodes() const noexcept { return num_nodes_; }
  /// -1 for an empty complex.
  int max_dimension() const noexcept { return static_cast<int>(by_dimension_.size()) - 1; }
  /// Dimension cap used at construction (-1 when unbounded).
  int dimension_cap() const noexcept { return dimension_cap_; }

  std::size_t count(int dim) const noexcept;
  std::size_t total_count() const noexcept;
  GroupView simplices(int dim) const noexcept;
  bool contains(std::span<const NodeId> sorted_vertices) const noexcept;
  bool contains(const Simplex& s) const noexcept { return contains(s.vertices()); }

  std::span<const NodeId> neighbors(NodeId v) const noexcept;
  std::size_t degree(NodeId v) const noexcept { return neighbors(v).size(); }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  std::vector<Simplex> all_simplices() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.num_nodes_ == b.num_nodes_ && a.by_dimension_ == b.by_dimension_;
  }

 private:
  friend SimplicialComplex build_complex(std::span<const Simplex>, const BuildOptions&);
  friend SimplicialComplex build_complex_from_groups(std::span<const GroupView>, const BuildOptions&);
  friend class SkeletonView;

  void build_adjacency();

  std::size_t num_nodes_ = 0;
  int dimension_cap_ = -1;
  std::vector<GroupList> by_dimension_;
  std::vector<std::size_t> adj_offsets_;
  std::vector<NodeId> adj_targets_;
};

/// Downward closure of the input. Duplicates collapse. Throws MalformedInput on repeated
/// vertices or an id beyond options.num_nodes, and DomainError if an unbounded closure of
/// a very large simplex is requested.
SimplicialComplex build_complex(std::span<const Simplex> simplices, const BuildOptions& options = {});

/// Same as build_complex for already canonical groups (sorted, distinct vertices).
SimplicialComplex build_complex_from_groups(std::span<const GroupView> groups,
                                            const BuildOptions& options = {});

/// The simplices of X with dimension <= k.
class SkeletonView {
 public:
  SkeletonView(const SimplicialComplex& complex, int k) noexcept : complex_(&complex), k_(k) {}

  int k() const noexcept { return k_; }
  int max_dimension() const noexcept;
  std::size_t count(int dim) const noexcept { return dim <= k_ ? complex_->count(dim) : 0; }
  std::size_t total_count() const noexcept;
  GroupView simplices(int dim) const noexcept { return dim <= k_ ? complex_->simplices(dim) : GroupView{}; }
  bool contains(std::span<const NodeId> sorted_vertices) const noexcept {
    return static_cast<int>(sorted_vertices.size()) - 1 <= k_ && complex_->contains(sorted_vertices);
  }
  const SimplicialComplex& complex() const noexcept { return *complex_; }

  /// Copies the view into a standalone complex.
  SimplicialComplex materialize() const;

 private:
  const SimplicialComplex* complex_;
  int k_;
};

/// Throws DomainError for k < 0. k beyond max_dimension covers the whole complex.
SkeletonView k_skeleton(const SimplicialComplex& complex, int k);

/// Exhaustive face check: every proper nonempty face of every stored simplex is stored,
/// and the adjacency lists agree with X^1.
bool is_downward_closed(const SimplicialComplex& complex);

}  // namespace simphom
