#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vwdg/cycles.hpp"

namespace vwdg {

/// Classes for two vertices of dimensions n1, n2.
BigInt count_two_simplices(long n1, long n2);

/// floor((n+1)/2): classes of a single edge out of a vertex of dimension n.
BigInt half_up(long n);

/// Classes of out-stars (one vertex with two out-edges) at a vertex of dimension n1.
BigInt count_type8(long n1);
BigInt f_closed(long n);
/// Five-branch piecewise count for the path and triangle family.
BigInt h_closed(long n, long m);
/// Classes of in-stars fed by vertices of dimensions n2 and n3.
BigInt count_type17(long n2, long n3);

struct TripleCountBreakdown {
  BigInt total;
  std::string branch;
  /// Family contributions in a fixed order: single-edge, out-star, in-star, path-triangle.
  /// The empty graph contributes the remaining 1.
  std::vector<std::pair<std::string, BigInt>> per_type;

  const BigInt &term(const std::string &family) const;
};

inline const std::vector<std::string> &triple_families() {
  static const std::vector<std::string> names{"single-edge", "out-star", "in-star", "path-triangle"};
  return names;
}

/// Closed-form count for three vertices, 1 <= n1 <= n2 <= n3.
///
/// Branches: "distinct", "n1=n2<n3", "n1=n2=n3". The case n1<n2=n3 has no
/// formula of its own; it is evaluated as "n1<n2=n3 (mirrored)" by the
/// n1=n2<n3 formula with the roles of the repeated and the single dimension
/// swapped. Throws std::invalid_argument on unordered input.
TripleCountBreakdown count_three_simplices(long n1, long n2, long n3);

/// Orbit partition of all acyclic graphs on three vertices, grouped by the
/// underlying shape of each class minimum. Branch is "brute-force".
TripleCountBreakdown count_three_vertices_by_family(long n1, long n2, long n3);

} // namespace vwdg
