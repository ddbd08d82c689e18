#include "simphom/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "simphom/errors.hpp"

namespace simphom {

Simplex::Simplex(std::vector<NodeId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw MalformedInput("simplex repeats vertex " + std::to_string(*dup));
  }
}

Simplex::Simplex(std::initializer_list<NodeId> vertices) : Simplex(std::vector<NodeId>(vertices)) {}

bool Simplex::contains(std::span<const NodeId> sorted_subset) const noexcept {
  return std::includes(vertices_.begin(), vertices_.end(), sorted_subset.begin(), sorted_subset.end());
}

std::size_t SimplexHash::operator()(std::span<const NodeId> vertices) const noexcept {
  // FNV-1a over the ids, then a final avalanche.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (NodeId v : vertices) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

bool GroupView::contains_sorted(std::span<const NodeId> group) const noexcept {
  if (group.size() != group_size_ || group_size_ == 0) return false;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto g = (*this)[mid];
    if (std::lexicographical_compare(g.begin(), g.end(), group.begin(), group.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == size()) return false;
  auto g = (*this)[lo];
  return std::equal(g.begin(), g.end(), group.begin());
}

void GroupList::sort_unique(std::vector<std::uint32_t>* multiplicity) {
  const std::size_t n = size();
  const std::size_t w = group_size_;
  if (w == 0) return;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto row = [&](std::size_t i) { return flat_.begin() + static_cast<std::ptrdiff_t>(i * w); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + w, row(b), row(b) + w);
  });

  std::vector<NodeId> out;
  out.reserve(flat_.size());
  if (multiplicity) multiplicity->clear();
  for (std::size_t i = 0; i < n; ++i) {
    auto r = row(order[i]);
    if (!out.empty() && std::equal(r, r + w, out.end() - static_cast<std::ptrdiff_t>(w))) {
      if (multiplicity) ++multiplicity->back();
      continue;
    }
    out.insert(out.end(), r, r + w);
    if (multiplicity) multiplicity->push_back(1);
  }
  flat_ = std::move(out);
}

std::vector<Simplex> GroupList::to_simplices() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto g = (*this)[i];
    out.emplace_back(std::vector<NodeId>(g.begin(), g.end()));
  }
  return out;
}

}  // namespace simphom
