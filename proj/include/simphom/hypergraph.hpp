#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "simphom/complex.hpp"
#include "simphom/simplex.hpp"

namespace simphom {

/// Hyperedges bucketed by size. Each bucket is a deduplicated, sorted set; the number of
/// times each hyperedge was recorded is kept alongside.
class Hypergraph {
 public:
  Hypergraph() = default;

  static Hypergraph from_records(std::span<const Simplex> records, std::size_t num_nodes = 0);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  /// Sizes with at least one hyperedge, ascending.
  std::vector<std::size_t> sizes() const;
  /// H^g; empty view when there are none.
  GroupView edges(std::size_t g) const noexcept;
  /// Parallel to edges(g).
  std::span<const std::uint32_t> multiplicities(std::size_t g) const noexcept;
  std::size_t num_edges() const noexcept;
  std::uint32_t multiplicity(std::span<const NodeId> sorted_edge) const noexcept;

 private:
  struct Bucket {
    GroupList edges;
    std::vector<std::uint32_t> multiplicity;
  };

  std::size_t num_nodes_ = 0;
  std::map<std::size_t, Bucket> buckets_;
};

/// Every hyperedge becomes a simplex together with all its faces.
SimplicialComplex complex_from_hypergraph(const Hypergraph& h, const BuildOptions& options = {});

}  // namespace simphom
