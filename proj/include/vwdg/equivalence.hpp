#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vwdg/digraph.hpp"
#include "vwdg/permutation.hpp"

namespace vwdg {

// Operations on omega-vector weighted digraphs. Vertices and coordinates are
// 0-based here; the JSON descriptors below are 1-based.

/// Plain local complementation at v: for every in-neighbour u and out-neighbour w
/// of v the weight of (u, w) becomes w(u,w) + w(u,v); the edge is present iff
/// the new weight is nonzero.
VWDigraph local_complement(const VWDigraph &g, std::size_t v);

/// Local complementation followed by permuting v's out-weights by sigma.
VWDigraph sigma_local_complement(const VWDigraph &g, std::size_t v, const Permutation &sigma);

/// (sigma, k)-local complementation at v. Cross pairs (u, w) are updated only
/// when coordinate k of w(v,w) is 1; v's out-weights become sigma.w(v,w), plus
/// the all-ones-except-coordinate-sigma^{-1}(k) vector when that coordinate was 1.
VWDigraph sigma_k_local_complement(const VWDigraph &g, std::size_t v, const Permutation &sigma, std::size_t k);

/// New weight (p, q) = old weight (mu(p), mu(q)). mu must preserve omega.
VWDigraph reorder_vertices(const VWDigraph &g, const Permutation &mu);

/// Replaces every out-weight w of v with permute(sigma, w).
VWDigraph permute_out_weights(const VWDigraph &g, std::size_t v, const Permutation &sigma);

/// Action of a facet permutation sigma_full in S_{omega(v)+1} of the simplex
/// factor at v, computed from the characteristic matrix [I | reduced matrix]:
/// permute the facet columns of v's simplex, row-reduce back to [I | L'] over
/// GF(2) and read the graph off L'. Independent of the combinatorial rules above.
VWDigraph matrix_action_oracle(const VWDigraph &g, std::size_t v, const Permutation &sigma_full);

/// Combinatorial route for the same action: permute_out_weights by sigma_full
/// restricted when the last facet is fixed, otherwise the
/// (bar(sigma_full), sigma_full(last))-local complementation.
VWDigraph facet_action(const VWDigraph &g, std::size_t v, const Permutation &sigma_full);

struct LocalComplement {
  std::size_t vertex;
};
struct SigmaLocalComplement {
  std::size_t vertex;
  Permutation sigma;
};
struct SigmaKLocalComplement {
  std::size_t vertex;
  Permutation sigma;
  std::size_t k;
};
struct PermuteWeights {
  std::size_t vertex;
  Permutation sigma;
};
struct ReorderVertices {
  Permutation mu;
};

/// One operation; ReorderVertices, PermuteWeights and SigmaKLocalComplement are
/// the generators of omega-equivalence.
using Operation =
    std::variant<LocalComplement, SigmaLocalComplement, SigmaKLocalComplement, PermuteWeights, ReorderVertices>;

VWDigraph apply_operation(const VWDigraph &g, const Operation &op);

/// {"op":"sigma-k-lc","vertex":4,"sigma":[2,3,1],"k":2}; op names are
/// lc, sigma-lc, sigma-k-lc, permute-weights, reorder (with "mu").
nlohmann::ordered_json operation_to_json(const Operation &op);
Operation operation_from_json(const nlohmann::json &doc);

/// The generating set used for orbit closure: adjacent weight transpositions and
/// (id, k)-local complementations at every vertex, and every transposition of
/// two vertices with equal dimension.
std::vector<Operation> orbit_generators(const DimensionFunction &omega);

struct OrbitBudget {
  std::size_t max_members = 10'000'000;
};

struct OrbitReport {
  VWDigraph canonical; ///< lexicographically least member
  std::size_t size = 0;
  std::optional<std::vector<VWDigraph>> members; ///< sorted, when requested
};

/// Breadth-first closure of {g} under orbit_generators. Throws
/// std::invalid_argument for cyclic input and BudgetExceeded past the budget.
OrbitReport orbit(const VWDigraph &g, bool include_members, OrbitBudget budget = {});

/// Canonical forms of all omega-equivalence classes of acyclic graphs, sorted.
std::vector<VWDigraph> class_representatives(const DimensionFunction &omega, EnumerationBudget budget = {});

std::size_t count_classes(const DimensionFunction &omega, EnumerationBudget budget = {});

} // namespace vwdg
