#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace vwdg {

/// Unweighted digraph on at most 8 labeled vertices; out_mask[i] bit j is the edge i -> j.
struct SmallDigraph {
  std::size_t size = 0;
  std::vector<std::uint8_t> out_mask;

  std::size_t out_degree(std::size_t i) const;
  bool has_edge(std::size_t i, std::size_t j) const { return (out_mask[i] >> j) & 1U; }
};

inline constexpr std::size_t max_listed_dag_vertices = 6;

/// Visits every acyclic digraph on `m` labeled vertices exactly once.
///
/// Each DAG is built from its unique decomposition into source layers: layer 0
/// is the set of sources, and every vertex of layer k+1 has at least one
/// in-neighbour in layer k and any in-neighbours from earlier layers.
/// Throws std::invalid_argument when m exceeds max_listed_dag_vertices.
void for_each_dag(std::size_t m, const std::function<void(const SmallDigraph &)> &visit);

/// Number of labeled DAGs on m vertices via the source-removal recurrence
/// a(m) = sum_k (-1)^{k+1} C(m,k) 2^{k(m-k)} a(m-k). Valid for m <= 10.
std::uint64_t count_labeled_dags(std::size_t m);

} // namespace vwdg
