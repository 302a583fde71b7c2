#pragma once

#include <initializer_list>
#include <tuple>

#include "vwdg/digraph.hpp"
#include "vwdg/equivalence.hpp"

namespace testing_graphs {

struct Edge {
  std::size_t from, to; // 1-indexed
  const char *weight;
};

inline vwdg::VWDigraph make(vwdg::DimensionFunction omega, std::initializer_list<Edge> edges) {
  vwdg::VWDigraph g(std::move(omega));
  for (const auto &e : edges) g.set_weight(e.from - 1, e.to - 1, vwdg::Gf2Vector::parse(e.weight));
  return g;
}

// The four-vertex example with a three-cycle weight permutation at vertex 4.
inline vwdg::VWDigraph worked_example() {
  return make({2, 3, 3, 3}, {{1, 2, "10"}, {1, 4, "11"}, {4, 3, "101"}, {4, 2, "111"}});
}

inline vwdg::VWDigraph worked_example_sigma_lc() {
  return make({2, 3, 3, 3}, {{1, 2, "01"}, {1, 3, "11"}, {1, 4, "11"}, {4, 3, "011"}, {4, 2, "111"}});
}

inline vwdg::VWDigraph worked_example_sigma_2_lc() {
  return make({2, 3, 3, 3}, {{1, 2, "01"}, {1, 4, "11"}, {4, 3, "011"}, {4, 2, "100"}});
}

// Every operation with every parameter, not just the orbit generators.
inline std::vector<vwdg::Operation> all_operations(const vwdg::DimensionFunction &omega) {
  using namespace vwdg;
  std::vector<Operation> ops;
  const auto m = omega.vertex_count();
  for (std::size_t v = 0; v < m; ++v) {
    ops.emplace_back(LocalComplement{v});
    for (const auto &s : all_permutations(omega[v])) {
      ops.emplace_back(SigmaLocalComplement{v, s});
      ops.emplace_back(PermuteWeights{v, s});
      for (std::size_t k = 0; k < omega[v]; ++k) ops.emplace_back(SigmaKLocalComplement{v, s, k});
    }
  }
  for (const auto &mu : all_permutations(m)) {
    bool preserves = true;
    for (std::size_t i = 0; i < m; ++i) preserves = preserves && omega[mu(i)] == omega[i];
    if (preserves) ops.emplace_back(ReorderVertices{mu});
  }
  return ops;
}

} // namespace testing_graphs
