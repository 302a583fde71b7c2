#include "vwdg/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "vwdg/errors.hpp"

namespace vwdg {

namespace {

void check_vertex(const VWDigraph &g, std::size_t v) {
  if (v >= g.vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v + 1) + " out of range");
  }
}

void check_weight_permutation(const VWDigraph &g, std::size_t v, const Permutation &sigma) {
  check_vertex(g, v);
  if (sigma.degree() != g.omega()[v]) {
    throw std::invalid_argument("permutation degree " + std::to_string(sigma.degree()) +
                                " does not match omega(" + std::to_string(v + 1) +
                                ") = " + std::to_string(g.omega()[v]));
  }
}

} // namespace

VWDigraph local_complement(const VWDigraph &g, std::size_t v) {
  check_vertex(g, v);
  VWDigraph out = g;
  for (auto u : g.in_neighbors(v)) {
    for (auto w : g.out_neighbors(v)) {
      if (u == w) throw std::invalid_argument("local_complement: 2-cycle through the vertex");
      out.set_weight(u, w, g.weight(u, w) + g.weight(u, v));
    }
  }
  return out;
}

VWDigraph sigma_local_complement(const VWDigraph &g, std::size_t v, const Permutation &sigma) {
  check_weight_permutation(g, v, sigma);
  return permute_out_weights(local_complement(g, v), v, sigma);
}

VWDigraph sigma_k_local_complement(const VWDigraph &g, std::size_t v, const Permutation &sigma, std::size_t k) {
  check_weight_permutation(g, v, sigma);
  const auto d = g.omega()[v];
  if (k >= d) {
    throw std::out_of_range("coordinate " + std::to_string(k + 1) + " out of range for omega(" +
                            std::to_string(v + 1) + ") = " + std::to_string(d));
  }
  const auto correction = Gf2Vector::ones_except(d, sigma.inverse()(k));
  const auto ins = g.in_neighbors(v);
  const auto outs = g.out_neighbors(v);
  VWDigraph out = g;
  for (auto w : outs) {
    const auto &vw = g.weight(v, w);
    if (!vw.get(k)) {
      out.set_weight(v, w, permute(sigma, vw));
      continue;
    }
    for (auto u : ins) {
      if (u == w) throw std::invalid_argument("sigma_k_local_complement: 2-cycle through the vertex");
      out.set_weight(u, w, g.weight(u, w) + g.weight(u, v));
    }
    out.set_weight(v, w, permute(sigma, vw) + correction);
  }
  return out;
}

VWDigraph reorder_vertices(const VWDigraph &g, const Permutation &mu) {
  const auto m = g.vertex_count();
  if (mu.degree() != m) throw std::invalid_argument("reorder_vertices: permutation degree must equal vertex count");
  for (std::size_t i = 0; i < m; ++i) {
    if (g.omega()[mu(i)] != g.omega()[i]) {
      throw std::invalid_argument("reorder_vertices: permutation does not preserve omega");
    }
  }
  VWDigraph out(g.omega());
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if (p != q) out.set_weight(p, q, g.weight(mu(p), mu(q)));
    }
  }
  return out;
}

VWDigraph permute_out_weights(const VWDigraph &g, std::size_t v, const Permutation &sigma) {
  check_weight_permutation(g, v, sigma);
  VWDigraph out = g;
  for (auto w : g.out_neighbors(v)) out.set_weight(v, w, permute(sigma, g.weight(v, w)));
  return out;
}

VWDigraph matrix_action_oracle(const VWDigraph &g, std::size_t v, const Permutation &sigma_full) {
  check_vertex(g, v);
  const auto &omega = g.omega();
  if (sigma_full.degree() != omega[v] + 1) {
    throw std::invalid_argument("matrix_action_oracle: facet permutation must have degree omega(v) + 1");
  }
  const auto reduced = to_reduced_matrix(g);
  const auto m = omega.vertex_count();
  const auto n = omega.total_dimension();
  if (n > Gf2Matrix::max_size) throw std::invalid_argument("matrix_action_oracle: total dimension exceeds 64");

  std::vector<std::size_t> offset(m, 0);
  for (std::size_t a = 1; a < m; ++a) offset[a] = offset[a - 1] + omega[a - 1];

  // columns[a][k] is the characteristic vector of facet k of simplex a (as a
  // bit mask over the n rows); facet omega(a) is the one carried by the
  // reduced matrix.
  std::vector<std::vector<std::uint64_t>> columns(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t k = 0; k < omega[a]; ++k) columns[a].push_back(std::uint64_t{1} << (offset[a] + k));
    std::uint64_t last = 0;
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < omega[b]; ++c) {
        if (reduced.at(b, a).get(c)) last |= std::uint64_t{1} << (offset[b] + c);
      }
    }
    columns[a].push_back(last);
  }

  // lambda' = lambda o sigma on the facets of simplex v.
  auto permuted = columns[v];
  for (std::size_t k = 0; k <= omega[v]; ++k) permuted[k] = columns[v][sigma_full(k)];
  columns[v] = permuted;

  Gf2Matrix p(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t k = 0; k < omega[a]; ++k) {
      const auto col = offset[a] + k;
      for (std::size_t r = 0; r < n; ++r) p.set(r, col, (columns[a][k] >> r) & 1U);
    }
  }
  const auto p_inv = inverse(p);

  VWDigraph out(omega);
  for (std::size_t s = 0; s < m; ++s) {
    const auto col = p_inv.apply(columns[s][omega[s]]);
    for (std::size_t b = 0; b < m; ++b) {
      Gf2Vector entry(omega[b]);
      for (std::size_t c = 0; c < omega[b]; ++c) entry.set(c, (col >> (offset[b] + c)) & 1U);
      if (b == s) {
        if (entry != Gf2Vector::ones(omega[b])) {
          throw std::logic_error("matrix_action_oracle: row reduction lost the unit diagonal");
        }
      } else {
        out.set_weight(b, s, entry);
      }
    }
  }
  return out;
}

VWDigraph facet_action(const VWDigraph &g, std::size_t v, const Permutation &sigma_full) {
  check_vertex(g, v);
  const auto d = g.omega()[v];
  if (sigma_full.degree() != d + 1) {
    throw std::invalid_argument("facet_action: facet permutation must have degree omega(v) + 1");
  }
  if (sigma_full(d) == d) return permute_out_weights(g, v, sigma_full.bar());
  return sigma_k_local_complement(g, v, sigma_full.bar(), sigma_full(d));
}

VWDigraph apply_operation(const VWDigraph &g, const Operation &op) {
  return std::visit(
      [&](const auto &o) -> VWDigraph {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, LocalComplement>) {
          return local_complement(g, o.vertex);
        } else if constexpr (std::is_same_v<T, SigmaLocalComplement>) {
          return sigma_local_complement(g, o.vertex, o.sigma);
        } else if constexpr (std::is_same_v<T, SigmaKLocalComplement>) {
          return sigma_k_local_complement(g, o.vertex, o.sigma, o.k);
        } else if constexpr (std::is_same_v<T, PermuteWeights>) {
          return permute_out_weights(g, o.vertex, o.sigma);
        } else {
          return reorder_vertices(g, o.mu);
        }
      },
      op);
}

nlohmann::ordered_json operation_to_json(const Operation &op) {
  nlohmann::ordered_json doc;
  std::visit(
      [&](const auto &o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, LocalComplement>) {
          doc["op"] = "lc";
          doc["vertex"] = o.vertex + 1;
        } else if constexpr (std::is_same_v<T, SigmaLocalComplement>) {
          doc["op"] = "sigma-lc";
          doc["vertex"] = o.vertex + 1;
          doc["sigma"] = o.sigma.one_line();
        } else if constexpr (std::is_same_v<T, SigmaKLocalComplement>) {
          doc["op"] = "sigma-k-lc";
          doc["vertex"] = o.vertex + 1;
          doc["sigma"] = o.sigma.one_line();
          doc["k"] = o.k + 1;
        } else if constexpr (std::is_same_v<T, PermuteWeights>) {
          doc["op"] = "permute-weights";
          doc["vertex"] = o.vertex + 1;
          doc["sigma"] = o.sigma.one_line();
        } else {
          doc["op"] = "reorder";
          doc["mu"] = o.mu.one_line();
        }
      },
      op);
  return doc;
}

namespace {

std::size_t one_based_field(const nlohmann::json &doc, const char *key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1) {
    throw std::invalid_argument(std::string("operation: \"") + key + "\" must be a positive integer");
  }
  return doc[key].get<std::size_t>() - 1;
}

Permutation permutation_field(const nlohmann::json &doc, const char *key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw std::invalid_argument(std::string("operation: \"") + key + "\" must be an array of images");
  }
  std::vector<int> images;
  for (const auto &x : doc[key]) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string("operation: \"") + key + "\" must hold integers");
    images.push_back(x.get<int>());
  }
  return Permutation::from_one_line(images);
}

} // namespace

Operation operation_from_json(const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("op") || !doc["op"].is_string()) {
    throw std::invalid_argument("operation: expected an object with a string \"op\"");
  }
  const auto name = doc["op"].get<std::string>();
  if (name == "lc") return LocalComplement{one_based_field(doc, "vertex")};
  if (name == "sigma-lc") return SigmaLocalComplement{one_based_field(doc, "vertex"), permutation_field(doc, "sigma")};
  if (name == "sigma-k-lc") {
    return SigmaKLocalComplement{one_based_field(doc, "vertex"), permutation_field(doc, "sigma"),
                                 one_based_field(doc, "k")};
  }
  if (name == "permute-weights") return PermuteWeights{one_based_field(doc, "vertex"), permutation_field(doc, "sigma")};
  if (name == "reorder") return ReorderVertices{permutation_field(doc, "mu")};
  throw std::invalid_argument("operation: unknown op '" + name + "'");
}

std::vector<Operation> orbit_generators(const DimensionFunction &omega) {
  std::vector<Operation> gens;
  const auto m = omega.vertex_count();
  for (std::size_t v = 0; v < m; ++v) {
    for (auto &t : adjacent_transpositions(omega[v])) gens.emplace_back(PermuteWeights{v, t});
    for (std::size_t k = 0; k < omega[v]; ++k) {
      gens.emplace_back(SigmaKLocalComplement{v, Permutation::identity(omega[v]), k});
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (omega[a] == omega[b]) gens.emplace_back(ReorderVertices{Permutation::transposition(m, a, b)});
    }
  }
  return gens;
}

namespace {

template <class OnMember>
void close_orbit(const VWDigraph &start, const std::vector<Operation> &gens, OrbitBudget budget,
                 std::unordered_set<VWDigraph, VWDigraphHash> &seen, OnMember &&on_member) {
  std::deque<VWDigraph> queue{start};
  seen.insert(start);
  std::size_t size = 0;
  while (!queue.empty()) {
    auto g = std::move(queue.front());
    queue.pop_front();
    if (++size > budget.max_members) {
      throw BudgetExceeded("orbit: more than " + std::to_string(budget.max_members) + " members",
                           static_cast<double>(size + queue.size()));
    }
    for (const auto &op : gens) {
      auto h = apply_operation(g, op);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
    on_member(std::move(g));
  }
}

} // namespace

OrbitReport orbit(const VWDigraph &g, bool include_members, OrbitBudget budget) {
  if (!is_acyclic(g)) throw std::invalid_argument("orbit: graph contains a directed cycle");
  std::unordered_set<VWDigraph, VWDigraphHash> seen;
  OrbitReport report{g, 0, std::nullopt};
  std::vector<VWDigraph> members;
  close_orbit(g, orbit_generators(g.omega()), budget, seen, [&](VWDigraph &&h) {
    ++report.size;
    if (h < report.canonical) report.canonical = h;
    if (include_members) members.push_back(std::move(h));
  });
  if (include_members) {
    std::sort(members.begin(), members.end());
    report.members = std::move(members);
  }
  return report;
}

std::vector<VWDigraph> class_representatives(const DimensionFunction &omega, EnumerationBudget budget) {
  const auto gens = orbit_generators(omega);
  std::unordered_set<VWDigraph, VWDigraphHash> seen;
  std::vector<VWDigraph> reps;
  for_each_acyclic(
      omega,
      [&](const VWDigraph &g) {
        if (seen.contains(g)) return true;
        // Enumeration is in increasing order, so the first unseen member is the orbit minimum.
        reps.push_back(g);
        close_orbit(g, gens, OrbitBudget{}, seen, [](VWDigraph &&) {});
        return true;
      },
      budget);
  return reps;
}

std::size_t count_classes(const DimensionFunction &omega, EnumerationBudget budget) {
  return class_representatives(omega, budget).size();
}

} // namespace vwdg
