#include "vwdg/dag.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace vwdg {

std::size_t SmallDigraph::out_degree(std::size_t i) const {
  return static_cast<std::size_t>(std::popcount(static_cast<unsigned>(out_mask[i])));
}

namespace {

// Iterates the submasks of `mask` (including 0).
template <class F> void for_each_submask(unsigned mask, F &&f) {
  unsigned sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

struct LayerBuilder {
  std::size_t m;
  const std::function<void(const SmallDigraph &)> &visit;
  SmallDigraph g;

  // Assigns in-edges to the vertices of `layer`, one vertex at a time, then
  // continues with the next layer drawn from `remaining`.
  void assign(const std::vector<std::size_t> &layer, std::size_t idx, unsigned prev_layer, unsigned earlier,
              unsigned remaining) {
    if (idx == layer.size()) {
      unsigned placed = earlier | prev_layer;
      unsigned this_layer = 0;
      for (auto v : layer) this_layer |= 1U << v;
      next_layer(this_layer, placed, remaining);
      return;
    }
    const auto v = layer[idx];
    for_each_submask(prev_layer, [&](unsigned from_prev) {
      if (from_prev == 0) return;
      for_each_submask(earlier, [&](unsigned from_earlier) {
        const unsigned parents = from_prev | from_earlier;
        for (std::size_t u = 0; u < m; ++u) {
          if ((parents >> u) & 1U) g.out_mask[u] |= static_cast<std::uint8_t>(1U << v);
        }
        assign(layer, idx + 1, prev_layer, earlier, remaining);
        for (std::size_t u = 0; u < m; ++u) {
          if ((parents >> u) & 1U) g.out_mask[u] &= static_cast<std::uint8_t>(~(1U << v));
        }
      });
    });
  }

  void next_layer(unsigned prev_layer, unsigned earlier, unsigned remaining) {
    if (remaining == 0) {
      visit(g);
      return;
    }
    for_each_submask(remaining, [&](unsigned layer_mask) {
      if (layer_mask == 0) return;
      std::vector<std::size_t> layer;
      for (std::size_t v = 0; v < m; ++v) {
        if ((layer_mask >> v) & 1U) layer.push_back(v);
      }
      assign(layer, 0, prev_layer, earlier, remaining & ~layer_mask);
    });
  }
};

} // namespace

void for_each_dag(std::size_t m, const std::function<void(const SmallDigraph &)> &visit) {
  if (m == 0 || m > max_listed_dag_vertices) {
    throw std::invalid_argument("for_each_dag: vertex count must be in 1.." +
                                std::to_string(max_listed_dag_vertices));
  }
  LayerBuilder b{m, visit, SmallDigraph{m, std::vector<std::uint8_t>(m, 0)}};
  const unsigned all = (1U << m) - 1;
  // Layer 0: the sources, no in-edges.
  for_each_submask(all, [&](unsigned sources) {
    if (sources == 0) return;
    b.next_layer(sources, 0, all & ~sources);
  });
}

std::uint64_t count_labeled_dags(std::size_t m) {
  if (m > 10) throw std::invalid_argument("count_labeled_dags: result would overflow");
  static std::map<std::size_t, std::uint64_t> memo{{0, 1}};
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  // Unsigned wrap-around is exact here: the true value fits in 64 bits for m <= 10.
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    binom = binom * (m - k + 1) / k;
    const std::uint64_t term = binom * (std::uint64_t{1} << (k * (m - k))) * count_labeled_dags(m - k);
    total = (k % 2 == 1) ? total + term : total - term;
  }
  memo[m] = total;
  return memo[m];
}

} // namespace vwdg
