#include "vwdg/closed_forms.hpp"

#include <stdexcept>

#include "vwdg/equivalence.hpp"

namespace vwdg {

namespace {

void require_positive(long n, const char *who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": dimensions must be positive");
}

BigInt exact_div(const BigInt &num, long den, const char *who) {
  if (num % den != 0) throw std::logic_error(std::string(who) + ": inexact division of " + num.str() + " by " + std::to_string(den));
  return num / den;
}

TripleCountBreakdown assemble(std::string branch, BigInt single, BigInt out_star, BigInt in_star, BigInt path) {
  TripleCountBreakdown r;
  r.branch = std::move(branch);
  r.total = 1 + single + out_star + in_star + path;
  r.per_type = {{"single-edge", single}, {"out-star", out_star}, {"in-star", in_star}, {"path-triangle", path}};
  return r;
}

TripleCountBreakdown repeated_pair(long n, long n3, std::string branch) {
  return assemble(std::move(branch), half_up(n) + half_up(n3), f_closed(n) + f_closed(n3),
                  half_up(n) * half_up(n3) + half_up(n) * half_up(n), h_closed(n, n) + h_closed(n, n3) + h_closed(n3, n));
}

} // namespace

const BigInt &TripleCountBreakdown::term(const std::string &family) const {
  for (const auto &[name, value] : per_type) {
    if (name == family) return value;
  }
  throw std::out_of_range("no family '" + family + "'");
}

BigInt half_up(long n) { return BigInt((n + 1) / 2); }

BigInt count_two_simplices(long n1, long n2) {
  require_positive(n1, "count_two_simplices");
  require_positive(n2, "count_two_simplices");
  if (n1 == n2) return 1 + half_up(n1);
  return 1 + half_up(n1) + half_up(n2);
}

BigInt count_type8(long n1) {
  require_positive(n1, "count_type8");
  const BigInt k = n1 / 2;
  if (n1 % 2 == 0) return exact_div(2 * k * k * k + 9 * k * k + k, 6, "count_type8");
  return exact_div((k + 1) * (k * k + 5 * k + 3), 3, "count_type8");
}

BigInt f_closed(long n) {
  require_positive(n, "f_closed");
  const BigInt x = n;
  if (n % 2 == 0) return exact_div(x * x * x + 9 * x * x + 2 * x, 24, "f_closed");
  return exact_div((x + 1) * (x * x + 8 * x + 3), 24, "f_closed");
}

BigInt h_closed(long n, long m) {
  require_positive(n, "h_closed");
  require_positive(m, "h_closed");
  const BigInt N = n, M = m;
  const BigInt even_m = N * M * (M * M + 9 * M + 14);
  const BigInt odd_m = N * (M * M * M + 9 * M * M + 23 * M + 15);
  if (n % 2 == 0 && m % 2 == 0) return exact_div(even_m, 48, "h_closed");
  if (n % 2 == 0) return exact_div(odd_m, 48, "h_closed");
  if (m % 2 == 0) return exact_div(even_m + 3 * M * (M + 2), 48, "h_closed");
  if (m % 4 == 1) return exact_div(odd_m + 3 * (M * M + 2 * M - 3), 48, "h_closed");
  return exact_div(odd_m + 3 * (M * M + 2 * M + 1), 48, "h_closed");
}

BigInt count_type17(long n2, long n3) {
  require_positive(n2, "count_type17");
  require_positive(n3, "count_type17");
  return half_up(n2) * half_up(n3);
}

TripleCountBreakdown count_three_simplices(long n1, long n2, long n3) {
  require_positive(n1, "count_three_simplices");
  if (!(n1 <= n2 && n2 <= n3)) throw std::invalid_argument("count_three_simplices: need n1 <= n2 <= n3");
  if (n1 == n2 && n2 == n3) {
    const long n = n1;
    return assemble("n1=n2=n3", half_up(n), f_closed(n), half_up(n) * half_up(n), h_closed(n, n));
  }
  if (n1 == n2) return repeated_pair(n1, n3, "n1=n2<n3");
  if (n2 == n3) return repeated_pair(n2, n1, "n1<n2=n3 (mirrored)");
  const long ns[3] = {n1, n2, n3};
  BigInt single = 0, out_star = 0, in_star = 0, path = 0;
  for (int i = 0; i < 3; ++i) {
    single += 2 * half_up(ns[i]);
    out_star += f_closed(ns[i]);
    for (int j = 0; j < 3; ++j) {
      if (i < j) in_star += half_up(ns[i]) * half_up(ns[j]);
      if (i != j) path += h_closed(ns[i], ns[j]);
    }
  }
  return assemble("distinct", single, out_star, in_star, path);
}

namespace {

std::string family_of(const VWDigraph &g) {
  const auto edges = g.edge_count();
  if (edges == 0) return "empty";
  if (edges == 1) return "single-edge";
  if (edges == 3) return "path-triangle";
  for (std::size_t v = 0; v < 3; ++v) {
    if (g.out_neighbors(v).size() == 2) return "out-star";
    if (g.in_neighbors(v).size() == 2) return "in-star";
  }
  return "path-triangle";
}

} // namespace

TripleCountBreakdown count_three_vertices_by_family(long n1, long n2, long n3) {
  for (long n : {n1, n2, n3}) require_positive(n, "count_three_vertices_by_family");
  const DimensionFunction omega({static_cast<std::size_t>(n1), static_cast<std::size_t>(n2), static_cast<std::size_t>(n3)});
  TripleCountBreakdown r;
  r.branch = "brute-force";
  for (const auto &name : triple_families()) r.per_type.emplace_back(name, 0);
  r.total = 0;
  for (const auto &g : class_representatives(omega)) {
    r.total += 1;
    const auto family = family_of(g);
    if (family == "empty") continue;
    for (auto &[name, value] : r.per_type) {
      if (name == family) value += 1;
    }
  }
  return r;
}

} // namespace vwdg
