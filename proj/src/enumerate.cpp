#include "simphom/enumerate.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "simphom/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace simphom {
namespace {

// Each vertex keeps only the neighbors that rank above it, where rank is (degree, id).
// Every triangle is then found exactly once, from its lowest-ranked vertex.
struct OrientedGraph {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> targets;

  explicit OrientedGraph(const SimplicialComplex& complex) {
    const std::size_t n = complex.num_nodes();
    offsets.assign(n + 1, 0);
    auto above = [&](NodeId u, NodeId v) {
      const std::size_t du = complex.degree(u);
      const std::size_t dv = complex.degree(v);
      return du < dv || (du == dv && u < v);
    };
    for (NodeId u = 0; u < n; ++u) {
      std::size_t c = 0;
      for (NodeId v : complex.neighbors(u)) c += above(u, v) ? 1 : 0;
      offsets[u + 1] = offsets[u] + c;
    }
    targets.resize(offsets[n]);
    for (NodeId u = 0; u < n; ++u) {
      std::size_t at = offsets[u];
      // neighbors() is sorted by id, so each out-list stays sorted by id.
      for (NodeId v : complex.neighbors(u)) {
        if (above(u, v)) targets[at++] = v;
      }
    }
  }

  std::size_t num_nodes() const { return offsets.size() - 1; }
  std::span<const NodeId> out(NodeId u) const {
    return std::span<const NodeId>(targets).subspan(offsets[u], offsets[u + 1] - offsets[u]);
  }
};

template <class Visit>
inline void triangles_at(const OrientedGraph& g, NodeId u, Visit&& visit) {
  const auto ou = g.out(u);
  for (NodeId v : ou) {
    const auto ov = g.out(v);
    auto a = ou.begin();
    auto b = ov.begin();
    while (a != ou.end() && b != ov.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        Triangle t{u, v, *a};
        std::sort(t.begin(), t.end());
        visit(t);
        ++a;
        ++b;
      }
    }
  }
}

void sort_triangles(std::vector<Triangle>& tris) { std::sort(tris.begin(), tris.end()); }

GroupList to_group_list(const std::vector<Triangle>& tris) {
  GroupList out(3);
  out.reserve(tris.size());
  for (const Triangle& t : tris) out.push_back(t);
  return out;
}

void require_k(int k) {
  if (k < 1) throw DomainError("potential k-simplices need k >= 1, got " + std::to_string(k));
}

// All pairs of stored vertices.
GroupList vertex_pairs(const SimplicialComplex& complex) {
  const GroupView vertices = complex.simplices(0);
  GroupList out(2);
  out.reserve(vertices.size() * (vertices.size() > 0 ? vertices.size() - 1 : 0) / 2);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const NodeId pair[2] = {vertices[i][0], vertices[j][0]};
      out.push_back(pair);
    }
  }
  return out;
}

// Candidates extending one (k-1)-simplex by a vertex above its largest id, appended in
// ascending order of the new vertex.
void extend_one(const SimplicialComplex& complex, std::span<const NodeId> base, std::vector<NodeId>& common,
                std::vector<NodeId>& scratch, std::vector<NodeId>& face, GroupList& out) {
  const NodeId top = base.back();
  auto first = complex.neighbors(base[0]);
  common.assign(std::upper_bound(first.begin(), first.end(), top), first.end());
  for (std::size_t j = 1; j < base.size() && !common.empty(); ++j) {
    auto nb = complex.neighbors(base[j]);
    scratch.clear();
    std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(scratch));
    common.swap(scratch);
  }
  const GroupView faces = complex.simplices(static_cast<int>(base.size()) - 1);
  for (NodeId w : common) {
    bool ok = true;
    // The face without w is `base`; the faces without one base vertex must be checked.
    for (std::size_t drop = 0; drop < base.size() && ok; ++drop) {
      face.clear();
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (j != drop) face.push_back(base[j]);
      }
      face.push_back(w);
      ok = faces.contains_sorted(face);
    }
    if (!ok) continue;
    face.assign(base.begin(), base.end());
    face.push_back(w);
    out.push_back(face);
  }
}

GroupList extend_serial(const SimplicialComplex& complex, int k) {
  GroupList out(static_cast<std::size_t>(k) + 1);
  const GroupView bases = complex.simplices(k - 1);
  std::vector<NodeId> common, scratch, face;
  for (std::size_t i = 0; i < bases.size(); ++i) extend_one(complex, bases[i], common, scratch, face, out);
  return out;
}

GroupList extend_parallel(const SimplicialComplex& complex, int k) {
  const std::size_t width = static_cast<std::size_t>(k) + 1;
  const GroupView bases = complex.simplices(k - 1);
  const std::size_t n = bases.size();
  const std::size_t chunk = 256;
  const std::size_t chunks = (n + chunk - 1) / chunk;
  std::vector<GroupList> parts(chunks, GroupList(width));
#pragma omp parallel
  {
    std::vector<NodeId> common, scratch, face;
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
      const std::size_t lo = static_cast<std::size_t>(c) * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        extend_one(complex, bases[i], common, scratch, face, parts[static_cast<std::size_t>(c)]);
      }
    }
  }
  GroupList out(width);
  std::size_t total = 0;
  for (const auto& p : parts) total += p.flat().size();
  out.flat().reserve(total);
  for (const auto& p : parts) out.flat().insert(out.flat().end(), p.flat().begin(), p.flat().end());
  return out;
}

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

GroupTally pair_tally(const SimplicialComplex& complex, const ClassLabeling& labeling) {
  GroupTally tally(2, labeling.num_classes());
  const GroupView vertices = complex.simplices(0);
  std::vector<std::uint64_t> per_class(labeling.num_classes(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) ++per_class[labeling.label(vertices[i][0])];
  const std::uint64_t n = vertices.size();
  tally.total = choose2(n);
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    const std::uint64_t nc = per_class[c];
    tally.homogeneous += choose2(nc);
    tally.by_type[c][2] = choose2(nc);
    tally.by_type[c][1] = nc * (n - nc);
  }
  return tally;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Triangle> closed_triangles_serial(const SimplicialComplex& complex) {
  const OrientedGraph g(complex);
  std::vector<Triangle> out;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    triangles_at(g, u, [&](const Triangle& t) { out.push_back(t); });
  }
  sort_triangles(out);
  return out;
}

std::vector<Triangle> closed_triangles(const SimplicialComplex& complex) {
  const OrientedGraph g(complex);
  const auto n = static_cast<std::ptrdiff_t>(g.num_nodes());
  std::vector<Triangle> out;
#pragma omp parallel
  {
    std::vector<Triangle> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::ptrdiff_t u = 0; u < n; ++u) {
      triangles_at(g, static_cast<NodeId>(u), [&](const Triangle& t) { local.push_back(t); });
    }
#pragma omp critical(simphom_triangles)
    out.insert(out.end(), local.begin(), local.end());
  }
  sort_triangles(out);
  return out;
}

std::uint64_t count_closed_triangles_serial(const SimplicialComplex& complex) {
  const OrientedGraph g(complex);
  std::uint64_t count = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    triangles_at(g, u, [&](const Triangle&) { ++count; });
  }
  return count;
}

std::uint64_t count_closed_triangles(const SimplicialComplex& complex) {
  const OrientedGraph g(complex);
  const auto n = static_cast<std::ptrdiff_t>(g.num_nodes());
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : count)
  for (std::ptrdiff_t u = 0; u < n; ++u) {
    triangles_at(g, static_cast<NodeId>(u), [&](const Triangle&) { ++count; });
  }
  return count;
}

void for_each_closed_triangle(const SimplicialComplex& complex, const std::function<void(const Triangle&)>& visit) {
  const OrientedGraph g(complex);
  for (NodeId u = 0; u < g.num_nodes(); ++u) triangles_at(g, u, visit);
}

GroupList enumerate_potential_k_simplices_serial(const SimplicialComplex& complex, int k) {
  require_k(k);
  if (k == 1) return vertex_pairs(complex);
  if (k == 2) return to_group_list(closed_triangles_serial(complex));
  return extend_serial(complex, k);
}

GroupList enumerate_potential_k_simplices(const SimplicialComplex& complex, int k) {
  require_k(k);
  if (k == 1) return vertex_pairs(complex);
  if (k == 2) return to_group_list(closed_triangles(complex));
  return extend_parallel(complex, k);
}

GroupList extend_potential_k_simplices(const SimplicialComplex& complex, int k) {
  require_k(k);
  if (k == 1) return vertex_pairs(complex);
  return extend_parallel(complex, k);
}

GroupTally::GroupTally(std::size_t g, std::size_t num_classes)
    : group_size(g), by_type(num_classes, std::vector<std::uint64_t>(g + 1, 0)) {}

void GroupTally::add(std::span<const NodeId> group, const ClassLabeling& labeling) {
  ClassId small[16];
  std::vector<ClassId> large;
  std::span<ClassId> classes;
  if (group.size() <= 16) {
    classes = std::span<ClassId>(small, group.size());
  } else {
    large.resize(group.size());
    classes = large;
  }
  for (std::size_t i = 0; i < group.size(); ++i) classes[i] = labeling.label(group[i]);
  std::sort(classes.begin(), classes.end());

  ++total;
  if (!classes.empty() && classes.front() == classes.back()) ++homogeneous;
  for (std::size_t i = 0; i < classes.size();) {
    std::size_t j = i;
    while (j < classes.size() && classes[j] == classes[i]) ++j;
    ++by_type[classes[i]][j - i];
    i = j;
  }
}

std::uint64_t GroupTally::count(ClassId c, std::size_t t) const {
  if (t != 0) return by_type[c][t];
  std::uint64_t present = 0;
  for (std::size_t i = 1; i < by_type[c].size(); ++i) present += by_type[c][i];
  return total - present;
}

void GroupTally::merge(const GroupTally& other) {
  total += other.total;
  homogeneous += other.homogeneous;
  for (std::size_t c = 0; c < by_type.size(); ++c) {
    for (std::size_t t = 0; t < by_type[c].size(); ++t) by_type[c][t] += other.by_type[c][t];
  }
}

GroupTally tally_groups_serial(GroupView groups, const ClassLabeling& labeling) {
  GroupTally tally(groups.group_size(), labeling.num_classes());
  for (std::size_t i = 0; i < groups.size(); ++i) tally.add(groups[i], labeling);
  return tally;
}

GroupTally tally_groups(GroupView groups, const ClassLabeling& labeling) {
  GroupTally tally(groups.group_size(), labeling.num_classes());
  const auto n = static_cast<std::ptrdiff_t>(groups.size());
#pragma omp parallel
  {
    GroupTally local(groups.group_size(), labeling.num_classes());
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) local.add(groups[static_cast<std::size_t>(i)], labeling);
#pragma omp critical(simphom_tally)
    tally.merge(local);
  }
  return tally;
}

GroupTally tally_potential_k_simplices_serial(const SimplicialComplex& complex, const ClassLabeling& labeling,
                                              int k) {
  require_k(k);
  if (k == 1) return pair_tally(complex, labeling);
  if (k == 2) {
    GroupTally tally(3, labeling.num_classes());
    for_each_closed_triangle(complex, [&](const Triangle& t) { tally.add(t, labeling); });
    return tally;
  }
  return tally_groups_serial(extend_serial(complex, k), labeling);
}

GroupTally tally_potential_k_simplices(const SimplicialComplex& complex, const ClassLabeling& labeling, int k) {
  require_k(k);
  if (k == 1) return pair_tally(complex, labeling);
  if (k == 2) {
    const OrientedGraph g(complex);
    const auto n = static_cast<std::ptrdiff_t>(g.num_nodes());
    GroupTally tally(3, labeling.num_classes());
#pragma omp parallel
    {
      GroupTally local(3, labeling.num_classes());
#pragma omp for schedule(dynamic, 64) nowait
      for (std::ptrdiff_t u = 0; u < n; ++u) {
        triangles_at(g, static_cast<NodeId>(u), [&](const Triangle& t) { local.add(t, labeling); });
      }
#pragma omp critical(simphom_tally)
      tally.merge(local);
    }
    return tally;
  }
  return tally_groups(extend_parallel(complex, k), labeling);
}

}  // namespace simphom
