#include "simphom/labeling.hpp"

#include <algorithm>

#include "simphom/errors.hpp"

namespace simphom {

ClassLabeling::ClassLabeling(std::vector<ClassId> labels, std::size_t num_classes,
                             std::vector<std::string> class_names)
    : labels_(std::move(labels)), counts_(num_classes, 0), names_(std::move(class_names)) {
  if (num_classes < 2) {
    throw DomainError("a labeling needs at least 2 classes, got " + std::to_string(num_classes));
  }
  if (!names_.empty() && names_.size() != num_classes) {
    throw DomainError("class name count does not match number of classes");
  }
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] >= num_classes) {
      throw DomainError("node " + std::to_string(v) + " has class " + std::to_string(labels_[v]) +
                        " outside [0, " + std::to_string(num_classes) + ")");
    }
    ++counts_[labels_[v]];
  }
}

ClassLabeling ClassLabeling::from_labels(std::vector<ClassId> labels) {
  ClassId max_label = 1;
  for (ClassId c : labels) max_label = std::max(max_label, c);
  return ClassLabeling(std::move(labels), std::size_t{max_label} + 1);
}

std::size_t ClassLabeling::class_count(ClassId c) const {
  if (c >= counts_.size()) throw DomainError("unknown class " + std::to_string(c));
  return counts_[c];
}

std::string ClassLabeling::class_name(ClassId c) const {
  if (c >= counts_.size()) throw DomainError("unknown class " + std::to_string(c));
  return names_.empty() ? std::to_string(c) : names_[c];
}

ClassId ClassLabeling::label(NodeId v) const {
  if (v >= labels_.size()) throw MissingLabel("node " + std::to_string(v) + " has no class label");
  return labels_[v];
}

ClassId ClassLabeling::class_by_name(const std::string& name) const {
  if (names_.empty()) {
    try {
      std::size_t pos = 0;
      unsigned long c = std::stoul(name, &pos);
      if (pos == name.size() && c < counts_.size()) return static_cast<ClassId>(c);
    } catch (const std::exception&) {
    }
  } else {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it != names_.end()) return static_cast<ClassId>(it - names_.begin());
  }
  throw DomainError("unknown class '" + name + "'");
}

bool is_homogeneous(std::span<const NodeId> vertices, const ClassLabeling& labeling) {
  if (vertices.empty()) return true;
  const ClassId first = labeling.label(vertices.front());
  bool same = true;
  for (NodeId v : vertices.subspan(1)) {
    // Keep scanning so that an unlabeled vertex anywhere is reported.
    same = (labeling.label(v) == first) && same;
  }
  return same;
}

std::size_t type_count(std::span<const NodeId> vertices, ClassId c, const ClassLabeling& labeling) {
  if (c >= labeling.num_classes()) throw DomainError("unknown class " + std::to_string(c));
  std::size_t t = 0;
  for (NodeId v : vertices) t += labeling.label(v) == c ? 1 : 0;
  return t;
}

}  // namespace simphom
