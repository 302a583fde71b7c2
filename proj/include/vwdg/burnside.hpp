#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vwdg/cycles.hpp"
#include "vwdg/gf2.hpp"
#include "vwdg/permutation.hpp"

namespace vwdg {

// Explicit orbit partitions of the group actions behind the out-star and
// path/triangle counts. Orbits are found with union-find; no fixed-point sums.

/// S_sigma membership: v is in S_sigma when sigma fixes the last point or
/// v vanishes at coordinate sigma(last).
bool in_stabilized_set(const Permutation &sigma, const Gf2Vector &v);

/// The four-case action of S_{n+1} on pairs of nonzero vectors of Z_2^n.
std::pair<Gf2Vector, Gf2Vector> type8_action(const Permutation &sigma, const Gf2Vector &v, const Gf2Vector &w);

struct HTriple {
  Gf2Vector u, w, w_prime;
  friend bool operator==(const HTriple &, const HTriple &) = default;
};

/// The eight-case action of S_{n+1} x S_{m+1} on (u, w, w').
HTriple h_action(const Permutation &sigma, const Permutation &beta, const HTriple &x);

enum class OrbitSweep {
  Auto,       ///< full group when |G|*|X| is small, generators otherwise
  FullGroup,  ///< every group element
  Generators, ///< adjacent transpositions only
};

/// Refuses (BudgetExceeded) beyond n1 = 8.
BigInt burnside_type8_oracle(long n1, OrbitSweep sweep = OrbitSweep::Auto);
/// Refuses (BudgetExceeded) beyond n = 5 or m = 5.
BigInt burnside_h_oracle(long n, long m, OrbitSweep sweep = OrbitSweep::Auto);

} // namespace vwdg
