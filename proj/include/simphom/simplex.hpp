#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace simphom {

using NodeId = std::uint32_t;

/// A set of distinct nodes kept in strictly increasing order. Two simplices are equal
/// iff their vertex sequences are equal. A simplex with k+1 vertices has dimension k.
class Simplex {
 public:
  Simplex() = default;

  /// Sorts the vertices. Throws MalformedInput on a repeated vertex.
  explicit Simplex(std::vector<NodeId> vertices);
  Simplex(std::initializer_list<NodeId> vertices);

  std::span<const NodeId> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  bool empty() const noexcept { return vertices_.empty(); }
  NodeId operator[](std::size_t i) const noexcept { return vertices_[i]; }

  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(std::span<const NodeId> sorted_subset) const noexcept;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<NodeId> vertices_;
};

struct SimplexHash {
  std::size_t operator()(std::span<const NodeId> vertices) const noexcept;
  std::size_t operator()(const Simplex& s) const noexcept { return (*this)(s.vertices()); }
};

/// Non-owning view over equally sized groups stored back to back.
class GroupView {
 public:
  GroupView() = default;
  GroupView(std::span<const NodeId> flat, std::size_t group_size) noexcept
      : flat_(flat), group_size_(group_size) {}

  std::size_t group_size() const noexcept { return group_size_; }
  std::size_t size() const noexcept { return group_size_ == 0 ? 0 : flat_.size() / group_size_; }
  bool empty() const noexcept { return size() == 0; }
  std::span<const NodeId> operator[](std::size_t i) const noexcept {
    return flat_.subspan(i * group_size_, group_size_);
  }
  std::span<const NodeId> flat() const noexcept { return flat_; }

  /// Binary search; valid only when the groups are sorted lexicographically.
  bool contains_sorted(std::span<const NodeId> group) const noexcept;

 private:
  std::span<const NodeId> flat_;
  std::size_t group_size_ = 0;
};

/// Owning storage for equally sized groups, each a sorted vertex set.
class GroupList {
 public:
  GroupList() = default;
  explicit GroupList(std::size_t group_size) : group_size_(group_size) {}
  GroupList(std::size_t group_size, std::vector<NodeId> flat)
      : group_size_(group_size), flat_(std::move(flat)) {}

  void push_back(std::span<const NodeId> group) { flat_.insert(flat_.end(), group.begin(), group.end()); }
  void reserve(std::size_t groups) { flat_.reserve(groups * group_size_); }

  std::size_t group_size() const noexcept { return group_size_; }
  std::size_t size() const noexcept { return group_size_ == 0 ? 0 : flat_.size() / group_size_; }
  bool empty() const noexcept { return size() == 0; }
  std::span<const NodeId> operator[](std::size_t i) const noexcept { return view()[i]; }
  GroupView view() const noexcept { return {flat_, group_size_}; }
  operator GroupView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

  std::vector<NodeId>& flat() noexcept { return flat_; }
  const std::vector<NodeId>& flat() const noexcept { return flat_; }

  /// Sorts groups lexicographically and drops duplicates. When `multiplicity` is given it
  /// receives, per surviving group, how many copies were collapsed into it.
  void sort_unique(std::vector<std::uint32_t>* multiplicity = nullptr);

  std::vector<Simplex> to_simplices() const;

  friend bool operator==(const GroupList&, const GroupList&) = default;

 private:
  std::size_t group_size_ = 0;
  std::vector<NodeId> flat_;
};

}  // namespace simphom
