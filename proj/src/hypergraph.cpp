#include "simphom/hypergraph.hpp"

#include <algorithm>

namespace simphom {

Hypergraph Hypergraph::from_records(std::span<const Simplex> records, std::size_t num_nodes) {
  Hypergraph h;
  std::size_t max_id = 0;
  for (const Simplex& s : records) {
    if (s.empty()) continue;
    max_id = std::max<std::size_t>(max_id, std::size_t{s.vertices().back()} + 1);
    auto [it, inserted] = h.buckets_.try_emplace(s.size());
    if (inserted) it->second.edges = GroupList(s.size());
    it->second.edges.push_back(s.vertices());
  }
  for (auto& [size, bucket] : h.buckets_) bucket.edges.sort_unique(&bucket.multiplicity);
  h.num_nodes_ = std::max(num_nodes, max_id);
  return h;
}

std::vector<std::size_t> Hypergraph::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& [size, bucket] : buckets_) out.push_back(size);
  return out;
}

GroupView Hypergraph::edges(std::size_t g) const noexcept {
  auto it = buckets_.find(g);
  return it == buckets_.end() ? GroupView{} : it->second.edges.view();
}

std::span<const std::uint32_t> Hypergraph::multiplicities(std::size_t g) const noexcept {
  auto it = buckets_.find(g);
  return it == buckets_.end() ? std::span<const std::uint32_t>{} : std::span(it->second.multiplicity);
}

std::size_t Hypergraph::num_edges() const noexcept {
  std::size_t n = 0;
  for (const auto& [size, bucket] : buckets_) n += bucket.edges.size();
  return n;
}

std::uint32_t Hypergraph::multiplicity(std::span<const NodeId> sorted_edge) const noexcept {
  auto it = buckets_.find(sorted_edge.size());
  if (it == buckets_.end()) return 0;
  const GroupView view = it->second.edges.view();
  std::size_t lo = 0;
  std::size_t hi = view.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto g = view[mid];
    if (std::lexicographical_compare(g.begin(), g.end(), sorted_edge.begin(), sorted_edge.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < view.size() && std::ranges::equal(view[lo], sorted_edge)) return it->second.multiplicity[lo];
  return 0;
}

SimplicialComplex complex_from_hypergraph(const Hypergraph& h, const BuildOptions& options) {
  std::vector<GroupView> views;
  for (std::size_t g : h.sizes()) views.push_back(h.edges(g));
  return build_complex_from_groups(views, options);
}

}  // namespace simphom
