#include "simphom/complex.hpp"

#include <algorithm>
#include <string>

#include "simphom/errors.hpp"

namespace simphom {
namespace {

constexpr std::size_t kMaxUnboundedClosureSize = 24;

class ClosureBuilder {
 public:
  explicit ClosureBuilder(const BuildOptions& options) : options_(options) {}

  void add(std::span<const NodeId> sorted) {
    if (sorted.empty()) return;
    for (NodeId v : sorted) {
      if (options_.num_nodes != 0 && v >= options_.num_nodes) {
        throw MalformedInput("vertex " + std::to_string(v) + " outside node range [0, " +
                             std::to_string(options_.num_nodes) + ")");
      }
      max_id_ = std::max<std::size_t>(max_id_, std::size_t{v} + 1);
    }
    const std::size_t s = sorted.size();
    std::size_t top = s - 1;
    if (options_.max_dimension >= 0) {
      top = std::min<std::size_t>(top, static_cast<std::size_t>(options_.max_dimension));
    } else if (s > kMaxUnboundedClosureSize) {
      throw DomainError("closure of a " + std::to_string(s) +
                        "-vertex simplex is too large; set a dimension cap");
    }
    if (layers_.size() <= top) {
      for (std::size_t d = layers_.size(); d <= top; ++d) layers_.emplace_back(d + 1);
    }
    std::vector<std::size_t> idx;
    std::vector<NodeId> face;
    for (std::size_t d = 0; d <= top; ++d) {
      const std::size_t r = d + 1;
      if (r == s) {
        layers_[d].push_back(sorted);
        continue;
      }
      idx.resize(r);
      for (std::size_t i = 0; i < r; ++i) idx[i] = i;
      face.resize(r);
      while (true) {
        for (std::size_t i = 0; i < r; ++i) face[i] = sorted[idx[i]];
        layers_[d].push_back(face);
        // Advance to the next r-combination of s in lexicographic order.
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == s - r + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }

  std::vector<GroupList> finish(std::size_t& num_nodes) {
    num_nodes = options_.num_nodes != 0 ? options_.num_nodes : max_id_;
    if (options_.num_nodes != 0) {
      if (layers_.empty()) layers_.emplace_back(1);
      auto& flat = layers_[0].flat();
      flat.reserve(flat.size() + num_nodes);
      for (std::size_t v = 0; v < num_nodes; ++v) flat.push_back(static_cast<NodeId>(v));
    }
    for (auto& layer : layers_) layer.sort_unique();
    while (!layers_.empty() && layers_.back().empty()) layers_.pop_back();
    return std::move(layers_);
  }

 private:
  BuildOptions options_;
  std::size_t max_id_ = 0;
  std::vector<GroupList> layers_;
};

}  // namespace

SimplicialComplex build_complex(std::span<const Simplex> simplices, const BuildOptions& options) {
  ClosureBuilder builder(options);
  for (const Simplex& s : simplices) builder.add(s.vertices());
  SimplicialComplex out;
  out.by_dimension_ = builder.finish(out.num_nodes_);
  out.dimension_cap_ = options.max_dimension;
  out.build_adjacency();
  return out;
}

SimplicialComplex build_complex_from_groups(std::span<const GroupView> groups, const BuildOptions& options) {
  ClosureBuilder builder(options);
  for (const GroupView& view : groups) {
    for (std::size_t i = 0; i < view.size(); ++i) {
      auto g = view[i];
      if (std::adjacent_find(g.begin(), g.end(), std::greater_equal<>()) != g.end()) {
        throw MalformedInput("group is not a strictly increasing vertex set");
      }
      builder.add(g);
    }
  }
  SimplicialComplex out;
  out.by_dimension_ = builder.finish(out.num_nodes_);
  out.dimension_cap_ = options.max_dimension;
  out.build_adjacency();
  return out;
}

void SimplicialComplex::build_adjacency() {
  adj_offsets_.assign(num_nodes_ + 1, 0);
  adj_targets_.clear();
  if (by_dimension_.size() < 2) return;
  const GroupView edges = by_dimension_[1].view();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    ++adj_offsets_[edges[i][0] + 1];
    ++adj_offsets_[edges[i][1] + 1];
  }
  for (std::size_t v = 0; v < num_nodes_; ++v) adj_offsets_[v + 1] += adj_offsets_[v];
  adj_targets_.resize(adj_offsets_.back());
  std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
  // Edges are sorted lexicographically, so filling in this order leaves every list sorted:
  // for vertex w, all (u, w) with u < w arrive before any (w, x) with x > w.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const NodeId u = edges[i][0];
    const NodeId v = edges[i][1];
    adj_targets_[cursor[v]++] = u;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const NodeId u = edges[i][0];
    const NodeId v = edges[i][1];
    adj_targets_[cursor[u]++] = v;
  }
}

std::size_t SimplicialComplex::count(int dim) const noexcept {
  if (dim < 0 || dim > max_dimension()) return 0;
  return by_dimension_[static_cast<std::size_t>(dim)].size();
}

std::size_t SimplicialComplex::total_count() const noexcept {
  std::size_t total = 0;
  for (const auto& layer : by_dimension_) total += layer.size();
  return total;
}

GroupView SimplicialComplex::simplices(int dim) const noexcept {
  if (dim < 0 || dim > max_dimension()) return {};
  return by_dimension_[static_cast<std::size_t>(dim)].view();
}

bool SimplicialComplex::contains(std::span<const NodeId> sorted_vertices) const noexcept {
  const int dim = static_cast<int>(sorted_vertices.size()) - 1;
  if (dim < 0 || dim > max_dimension()) return false;
  if (dim == 1) return has_edge(sorted_vertices[0], sorted_vertices[1]);
  return by_dimension_[static_cast<std::size_t>(dim)].view().contains_sorted(sorted_vertices);
}

std::span<const NodeId> SimplicialComplex::neighbors(NodeId v) const noexcept {
  if (v >= num_nodes_ || adj_offsets_.empty()) return {};
  return std::span<const NodeId>(adj_targets_).subspan(adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]);
}

bool SimplicialComplex::has_edge(NodeId u, NodeId v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(total_count());
  for (const auto& layer : by_dimension_) {
    auto part = layer.to_simplices();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

int SkeletonView::max_dimension() const noexcept { return std::min(k_, complex_->max_dimension()); }

std::size_t SkeletonView::total_count() const noexcept {
  std::size_t total = 0;
  for (int d = 0; d <= max_dimension(); ++d) total += complex_->count(d);
  return total;
}

SimplicialComplex SkeletonView::materialize() const {
  SimplicialComplex out;
  out.num_nodes_ = complex_->num_nodes_;
  out.dimension_cap_ = k_;
  const int top = max_dimension();
  out.by_dimension_.assign(complex_->by_dimension_.begin(), complex_->by_dimension_.begin() + (top + 1));
  out.build_adjacency();
  return out;
}

SkeletonView k_skeleton(const SimplicialComplex& complex, int k) {
  if (k < 0) throw DomainError("skeleton dimension must be >= 0, got " + std::to_string(k));
  return {complex, k};
}

bool is_downward_closed(const SimplicialComplex& complex) {
  std::vector<NodeId> face;
  for (int d = 0; d <= complex.max_dimension(); ++d) {
    const GroupView layer = complex.simplices(d);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      auto s = layer[i];
      if (std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) != s.end()) return false;
      if (s.back() >= complex.num_nodes()) return false;
      if (d == 0) continue;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != drop) face.push_back(s[j]);
        }
        if (!complex.simplices(d - 1).contains_sorted(face)) return false;
      }
    }
  }
  std::size_t adjacency = 0;
  for (NodeId v = 0; v < complex.num_nodes(); ++v) {
    auto nb = complex.neighbors(v);
    if (!std::is_sorted(nb.begin(), nb.end())) return false;
    for (NodeId w : nb) {
      const NodeId e[2] = {std::min(v, w), std::max(v, w)};
      if (!complex.simplices(1).contains_sorted(e)) return false;
    }
    adjacency += nb.size();
  }
  return adjacency == 2 * complex.count(1);
}

}  // namespace simphom
