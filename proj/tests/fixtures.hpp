#pragma once

#include <vector>

#include "simphom/complex.hpp"
#include "simphom/labeling.hpp"

namespace simphom::fixtures {

// Eight nodes split 4/4 between classes 0 ({0,1,2,3}) and 1 ({4,5,6,7}).
//
//   K4 on {0,1,2,3}, plus 2-4, 3-4, 3-5, 4-5 and the 4-cycle 4-5-6-7-4.
//
// Closed triangles: 012 013 023 123 (homogeneous), 234 345 (mixed).
// Filled triangles: 012 013 (homogeneous), 345 (mixed).
inline std::vector<Simplex> homophily_example_records() {
  return {
      Simplex{0, 1}, Simplex{0, 2}, Simplex{0, 3}, Simplex{1, 2}, Simplex{1, 3}, Simplex{2, 3},
      Simplex{2, 4}, Simplex{3, 4}, Simplex{3, 5}, Simplex{4, 5}, Simplex{5, 6}, Simplex{6, 7},
      Simplex{4, 7}, Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{3, 4, 5},
  };
}

inline SimplicialComplex homophily_example() {
  const auto records = homophily_example_records();
  BuildOptions options;
  options.num_nodes = 8;
  return build_complex(records, options);
}

inline ClassLabeling homophily_example_labels() { return ClassLabeling({0, 0, 0, 0, 1, 1, 1, 1}, 2); }

}  // namespace simphom::fixtures
