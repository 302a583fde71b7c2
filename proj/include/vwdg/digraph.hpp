#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vwdg/dag.hpp"
#include "vwdg/gf2.hpp"

namespace vwdg {

using BigInt = boost::multiprecision::cpp_int;

/// The dimension function: dims()[i] is the weight dimension of vertex i.
class DimensionFunction {
public:
  DimensionFunction() = default;
  explicit DimensionFunction(std::vector<std::size_t> dims);
  DimensionFunction(std::initializer_list<std::size_t> dims)
      : DimensionFunction(std::vector<std::size_t>(dims)) {}

  /// Parses "2,3,3" (comma separated positive integers).
  static DimensionFunction parse(std::string_view text);

  std::size_t vertex_count() const { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_.at(i); }
  const std::vector<std::size_t> &dims() const { return dims_; }
  std::size_t total_dimension() const;
  std::string to_string() const;

  friend bool operator==(const DimensionFunction &, const DimensionFunction &) = default;

private:
  std::vector<std::size_t> dims_;
};

/// Square matrix whose row-i entries are vectors of dimension omega[i].
class VectorMatrix {
public:
  VectorMatrix() = default;
  /// All-zero matrix.
  explicit VectorMatrix(DimensionFunction omega);

  const DimensionFunction &omega() const { return omega_; }
  std::size_t size() const { return omega_.vertex_count(); }

  const Gf2Vector &at(std::size_t i, std::size_t j) const { return entries_.at(i * size() + j); }
  /// Throws std::invalid_argument if v.dim() != omega[i].
  void set(std::size_t i, std::size_t j, const Gf2Vector &v);

  /// Bit-string concatenation of all entries, row-major.
  std::string serialize() const;

  friend bool operator==(const VectorMatrix &, const VectorMatrix &) = default;
  friend std::strong_ordering operator<=>(const VectorMatrix &a, const VectorMatrix &b);

private:
  DimensionFunction omega_;
  std::vector<Gf2Vector> entries_;
};

/// Digraph on labeled vertices 0..m-1 whose edge i -> j carries a nonzero
/// weight of dimension omega[i]. A zero weight means the edge is absent.
class VWDigraph {
public:
  VWDigraph() = default;
  explicit VWDigraph(DimensionFunction omega);

  const DimensionFunction &omega() const { return matrix_.omega(); }
  std::size_t vertex_count() const { return matrix_.size(); }

  const Gf2Vector &weight(std::size_t from, std::size_t to) const { return matrix_.at(from, to); }
  bool has_edge(std::size_t from, std::size_t to) const { return !weight(from, to).is_zero(); }
  /// Setting a zero weight removes the edge. Self-loops are rejected.
  void set_weight(std::size_t from, std::size_t to, const Gf2Vector &w);

  std::vector<std::size_t> out_neighbors(std::size_t v) const;
  std::vector<std::size_t> in_neighbors(std::size_t v) const;
  std::size_t edge_count() const;

  /// Bit j is set when the edge v -> j is present.
  std::uint64_t out_mask(std::size_t v) const;

  const VectorMatrix &matrix() const { return matrix_; }

  friend bool operator==(const VWDigraph &, const VWDigraph &) = default;
  /// Lexicographic order of the serialized adjacency matrices.
  friend std::strong_ordering operator<=>(const VWDigraph &a, const VWDigraph &b) {
    return a.matrix_ <=> b.matrix_;
  }

private:
  VectorMatrix matrix_;
};

struct VWDigraphHash {
  std::size_t operator()(const VWDigraph &g) const noexcept;
};

bool is_acyclic(const VWDigraph &g);

VectorMatrix adjacency_matrix(const VWDigraph &g);

/// Adjacency matrix plus the all-ones vectors on the diagonal.
/// Throws std::invalid_argument for cyclic input.
VectorMatrix to_reduced_matrix(const VWDigraph &g);

/// Scalar matrix with entry (i, j) = coordinate ks[i] of a(i, j).
Gf2Matrix specialize(const VectorMatrix &a, const std::vector<std::size_t> &ks);

/// Membership in M_omega: every coordinate specialization has all principal minors 1.
bool is_in_M_omega(const VectorMatrix &a);

/// Inverse of to_reduced_matrix. Throws std::invalid_argument if a is not in M_omega.
VWDigraph from_vector_matrix(const VectorMatrix &a);

struct EnumerationBudget {
  double max_candidates = 1e8;
};

/// Loose upper bound prod_i (2^omega(i))^(m-1) on the candidates scanned by enumeration.
double enumeration_bound(const DimensionFunction &omega);

/// Visits every acyclic omega-vector weighted digraph once, in increasing
/// lexicographic order of the serialized adjacency matrix. The visitor
/// returns false to stop early. Throws BudgetExceeded when
/// enumeration_bound(omega) exceeds the budget.
void for_each_acyclic(const DimensionFunction &omega, const std::function<bool(const VWDigraph &)> &visit,
                      EnumerationBudget budget = {});

std::vector<VWDigraph> enumerate_acyclic(const DimensionFunction &omega, EnumerationBudget budget = {});

/// |M_omega(m)| as the sum over labeled DAGs of prod_i (2^omega(i) - 1)^outdeg(i).
BigInt count_M_omega(const DimensionFunction &omega);

/// The 0/1 matrix A(G) + I of an unweighted DAG (an element of M(m)).
Gf2Matrix dag_matrix(const SmallDigraph &g);

/// Sum over fixed-point-free permutations of prod_i v(i, s(i)), mod 2.
int fixed_point_free_sum(const Gf2Matrix &v);

/// Sum over all orderings (a_1..a_r) of the vertices outside `excluded` and `i`
/// of v(i,a_1) v(a_1,a_2) ... v(a_r,i), mod 2.
/// Requires i not in `excluded` and |excluded| <= n - 2.
int cycle_sum(const Gf2Matrix &v, std::uint64_t excluded, std::size_t i);

} // namespace vwdg
