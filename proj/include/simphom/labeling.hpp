#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simphom/simplex.hpp"

namespace simphom {

using ClassId = std::uint32_t;

/// Total map from the nodes 0..n-1 to classes 0..m-1, with m >= 2.
///
/// The class domain is fixed at construction, so a class may have a zero count (this
/// happens routinely after node subsampling). Optional class names are kept for reporting.
class ClassLabeling {
 public:
  ClassLabeling() = default;

  /// Throws DomainError if num_classes < 2 or any label is out of range.
  ClassLabeling(std::vector<ClassId> labels, std::size_t num_classes,
                std::vector<std::string> class_names = {});

  /// Infers the number of classes as max label + 1 (at least 2).
  static ClassLabeling from_labels(std::vector<ClassId> labels);

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  std::size_t num_classes() const noexcept { return counts_.size(); }
  std::size_t class_count(ClassId c) const;
  std::span<const std::size_t> class_counts() const noexcept { return counts_; }
  std::span<const ClassId> labels() const noexcept { return labels_; }
  const std::vector<std::string>& class_names() const noexcept { return names_; }
  std::string class_name(ClassId c) const;

  /// Throws MissingLabel when the node is outside the labeled range.
  ClassId label(NodeId v) const;
  bool has_label(NodeId v) const noexcept { return v < labels_.size(); }

  /// Class id for a name, or DomainError.
  ClassId class_by_name(const std::string& name) const;

  friend bool operator==(const ClassLabeling&, const ClassLabeling&) = default;

 private:
  std::vector<ClassId> labels_;
  std::vector<std::size_t> counts_;
  std::vector<std::string> names_;
};

/// True iff all vertices share one class. Vacuously true for 0 or 1 vertices.
bool is_homogeneous(std::span<const NodeId> vertices, const ClassLabeling& labeling);
inline bool is_homogeneous(const Simplex& s, const ClassLabeling& labeling) {
  return is_homogeneous(s.vertices(), labeling);
}

/// Number of vertices carrying class `c`. Throws DomainError for a class outside the domain.
std::size_t type_count(std::span<const NodeId> vertices, ClassId c, const ClassLabeling& labeling);
inline std::size_t type_count(const Simplex& s, ClassId c, const ClassLabeling& labeling) {
  return type_count(s.vertices(), c, labeling);
}

}  // namespace simphom
