#include "vwdg/digraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "vwdg/errors.hpp"

namespace vwdg {

DimensionFunction::DimensionFunction(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("DimensionFunction: at least one vertex is required");
  if (dims_.size() > 64) throw std::invalid_argument("DimensionFunction: at most 64 vertices");
  for (auto d : dims_) {
    if (d < 1 || d > Gf2Vector::max_dim) {
      throw std::invalid_argument("DimensionFunction: every dimension must be in 1.." +
                                  std::to_string(Gf2Vector::max_dim));
    }
  }
}

DimensionFunction DimensionFunction::parse(std::string_view text) {
  std::vector<std::size_t> dims;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("DimensionFunction: cannot parse '" + std::string(text) + "'");
    }
    dims.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return DimensionFunction(std::move(dims));
}

std::size_t DimensionFunction::total_dimension() const {
  std::size_t n = 0;
  for (auto d : dims_) n += d;
  return n;
}

std::string DimensionFunction::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(dims_[i]);
  }
  return s;
}

VectorMatrix::VectorMatrix(DimensionFunction omega) : omega_(std::move(omega)) {
  const auto m = omega_.vertex_count();
  entries_.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) entries_.push_back(Gf2Vector::zero(omega_[i]));
  }
}

void VectorMatrix::set(std::size_t i, std::size_t j, const Gf2Vector &v) {
  if (i >= size() || j >= size()) throw std::out_of_range("VectorMatrix: index out of range");
  if (v.dim() != omega_[i]) {
    throw std::invalid_argument("VectorMatrix: entry in row " + std::to_string(i + 1) + " must have dimension " +
                                std::to_string(omega_[i]));
  }
  entries_[i * size() + j] = v;
}

std::string VectorMatrix::serialize() const {
  std::string s;
  for (const auto &e : entries_) s += e.to_string();
  return s;
}

std::strong_ordering operator<=>(const VectorMatrix &a, const VectorMatrix &b) {
  if (auto c = a.omega_.dims() <=> b.omega_.dims(); c != 0) return c;
  // Same omega, so entry-wise comparison equals comparison of the serialized strings.
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (auto c = a.entries_[k].bits() <=> b.entries_[k].bits(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

VWDigraph::VWDigraph(DimensionFunction omega) : matrix_(std::move(omega)) {}

void VWDigraph::set_weight(std::size_t from, std::size_t to, const Gf2Vector &w) {
  if (from == to) throw std::invalid_argument("VWDigraph: self-loops are not allowed");
  matrix_.set(from, to, w);
}

std::vector<std::size_t> VWDigraph::out_neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < vertex_count(); ++w) {
    if (has_edge(v, w)) out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> VWDigraph::in_neighbors(std::size_t v) const {
  std::vector<std::size_t> in;
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    if (has_edge(u, v)) in.push_back(u);
  }
  return in;
}

std::size_t VWDigraph::edge_count() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) n += static_cast<std::size_t>(std::popcount(out_mask(v)));
  return n;
}

std::uint64_t VWDigraph::out_mask(std::size_t v) const {
  std::uint64_t mask = 0;
  for (std::size_t w = 0; w < vertex_count(); ++w) {
    if (has_edge(v, w)) mask |= std::uint64_t{1} << w;
  }
  return mask;
}

std::size_t VWDigraphHash::operator()(const VWDigraph &g) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  const auto m = g.vertex_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      h ^= g.weight(i, j).bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return static_cast<std::size_t>(h);
}

namespace {

bool acyclic_masks(const std::vector<std::uint64_t> &out) {
  const auto m = out.size();
  std::vector<std::size_t> indeg(m, 0);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t w = 0; w < m; ++w) {
      if ((out[u] >> w) & 1U) ++indeg[w];
    }
  }
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < m; ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  std::size_t removed = 0;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    ++removed;
    for (std::size_t w = 0; w < m; ++w) {
      if (((out[u] >> w) & 1U) && --indeg[w] == 0) stack.push_back(w);
    }
  }
  return removed == m;
}

} // namespace

bool is_acyclic(const VWDigraph &g) {
  std::vector<std::uint64_t> out(g.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = g.out_mask(v);
  return acyclic_masks(out);
}

VectorMatrix adjacency_matrix(const VWDigraph &g) { return g.matrix(); }

VectorMatrix to_reduced_matrix(const VWDigraph &g) {
  if (!is_acyclic(g)) throw std::invalid_argument("to_reduced_matrix: graph contains a directed cycle");
  VectorMatrix a = g.matrix();
  for (std::size_t i = 0; i < a.size(); ++i) a.set(i, i, Gf2Vector::ones(g.omega()[i]));
  return a;
}

Gf2Matrix specialize(const VectorMatrix &a, const std::vector<std::size_t> &ks) {
  if (ks.size() != a.size()) throw std::invalid_argument("specialize: one coordinate index per row is required");
  Gf2Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ks[i] >= a.omega()[i]) {
      throw std::out_of_range("specialize: coordinate index out of range in row " + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < a.size(); ++j) out.set(i, j, a.at(i, j).get(ks[i]));
  }
  return out;
}

bool is_in_M_omega(const VectorMatrix &a) {
  const auto &omega = a.omega();
  std::vector<std::size_t> ks(a.size(), 0);
  while (true) {
    if (!all_principal_minors_one(specialize(a, ks))) return false;
    std::size_t i = 0;
    while (i < ks.size() && ++ks[i] == omega[i]) ks[i++] = 0;
    if (i == ks.size()) return true;
  }
}

VWDigraph from_vector_matrix(const VectorMatrix &a) {
  if (!is_in_M_omega(a)) throw std::invalid_argument("from_vector_matrix: matrix is not in M_omega");
  VWDigraph g(a.omega());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) g.set_weight(i, j, a.at(i, j));
    }
  }
  return g;
}

double enumeration_bound(const DimensionFunction &omega) {
  const auto m = omega.vertex_count();
  double log2_bound = 0;
  for (auto d : omega.dims()) log2_bound += static_cast<double>(d) * static_cast<double>(m - 1);
  return std::exp2(log2_bound);
}

namespace {

struct AcyclicEnumerator {
  const DimensionFunction &omega;
  const std::function<bool(const VWDigraph &)> &visit;
  VWDigraph g;
  std::vector<std::uint64_t> out;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  bool stopped = false;

  bool reaches(std::size_t from, std::size_t target) const {
    std::uint64_t seen = std::uint64_t{1} << from;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::size_t u = 0; u < out.size(); ++u) {
        if ((frontier >> u) & 1U) next |= out[u];
      }
      if ((next >> target) & 1U) return true;
      frontier = next & ~seen;
      seen |= next;
    }
    return false;
  }

  void run(std::size_t k) {
    if (stopped) return;
    if (k == slots.size()) {
      if (!visit(g)) stopped = true;
      return;
    }
    const auto [i, j] = slots[k];
    const auto d = omega[i];
    run(k + 1);
    if (i == j || stopped) return;
    if (reaches(j, i)) return;
    out[i] |= std::uint64_t{1} << j;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << d) && !stopped; ++bits) {
      g.set_weight(i, j, Gf2Vector(d, bits));
      run(k + 1);
    }
    g.set_weight(i, j, Gf2Vector::zero(d));
    out[i] &= ~(std::uint64_t{1} << j);
  }
};

} // namespace

void for_each_acyclic(const DimensionFunction &omega, const std::function<bool(const VWDigraph &)> &visit,
                      EnumerationBudget budget) {
  const double bound = enumeration_bound(omega);
  if (bound > budget.max_candidates) {
    throw BudgetExceeded("enumerate_acyclic: search space bound " + std::to_string(bound) + " exceeds budget " +
                             std::to_string(budget.max_candidates),
                         bound);
  }
  AcyclicEnumerator e{omega, visit, VWDigraph(omega), std::vector<std::uint64_t>(omega.vertex_count(), 0), {}};
  const auto m = omega.vertex_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) e.slots.emplace_back(i, j);
    }
  }
  e.run(0);
}

std::vector<VWDigraph> enumerate_acyclic(const DimensionFunction &omega, EnumerationBudget budget) {
  std::vector<VWDigraph> out;
  for_each_acyclic(
      omega,
      [&](const VWDigraph &g) {
        out.push_back(g);
        return true;
      },
      budget);
  return out;
}

BigInt count_M_omega(const DimensionFunction &omega) {
  const auto m = omega.vertex_count();
  std::vector<BigInt> factor(m);
  for (std::size_t i = 0; i < m; ++i) factor[i] = (BigInt(1) << omega[i]) - 1;
  BigInt total = 0;
  for_each_dag(m, [&](const SmallDigraph &g) {
    BigInt term = 1;
    for (std::size_t i = 0; i < m; ++i) term *= boost::multiprecision::pow(factor[i], static_cast<unsigned>(g.out_degree(i)));
    total += term;
  });
  return total;
}

Gf2Matrix dag_matrix(const SmallDigraph &g) {
  auto a = Gf2Matrix::identity(g.size);
  for (std::size_t i = 0; i < g.size; ++i) {
    for (std::size_t j = 0; j < g.size; ++j) {
      if (g.has_edge(i, j)) a.set(i, j, true);
    }
  }
  return a;
}

int fixed_point_free_sum(const Gf2Matrix &v) {
  int sum = 0;
  for (const auto &s : all_permutations(v.size())) {
    int prod = 1;
    for (std::size_t i = 0; i < v.size() && prod; ++i) {
      if (s(i) == i || !v.get(i, s(i))) prod = 0;
    }
    sum ^= prod;
  }
  return sum;
}

int cycle_sum(const Gf2Matrix &v, std::uint64_t excluded, std::size_t i) {
  const auto n = v.size();
  if (i >= n) throw std::out_of_range("cycle_sum: vertex out of range");
  if ((excluded >> i) & 1U) throw std::invalid_argument("cycle_sum: i must not belong to the excluded set");
  if (n < 64 && (excluded >> n) != 0) throw std::out_of_range("cycle_sum: excluded set out of range");
  if (static_cast<std::size_t>(std::popcount(excluded)) + 2 > n) {
    throw std::invalid_argument("cycle_sum: excluded set must leave at least one other vertex");
  }
  std::vector<std::size_t> rest;
  for (std::size_t a = 0; a < n; ++a) {
    if (a != i && !((excluded >> a) & 1U)) rest.push_back(a);
  }
  int sum = 0;
  do {
    int prod = v.get(i, rest.front()) && v.get(rest.back(), i);
    for (std::size_t t = 0; t + 1 < rest.size() && prod; ++t) prod = v.get(rest[t], rest[t + 1]);
    sum ^= prod;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return sum;
}

} // namespace vwdg
