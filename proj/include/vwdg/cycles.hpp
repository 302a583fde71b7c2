#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vwdg {

using BigInt = boost::multiprecision::cpp_int;

// Cycle statistics of permutations. All values are exact; negative arguments
// yield 0. Results are memoized in per-thread append-only tables.

BigInt factorial(long n);

/// x (x+1) ... (x+n-1); the empty product is 1.
BigInt rising_factorial(const BigInt &x, long n);

/// Unsigned Stirling numbers of the first kind: permutations of n elements with m cycles.
BigInt stirling_c(long n, long m);
/// Second route: c(n,m) = sum_k (n-1)!/(n-k)! c(n-k, m-1).
BigInt stirling_c_by_cycle_removal(long n, long m);

/// Permutations of n elements with m cycles, all of length divisible by d.
/// Computed by both recurrences below; throws std::logic_error if they disagree.
BigInt c_divisible(long d, long n, long m);
/// Removes the cycle through the largest element: sum_k (n-1)!/(n-dk)! c_d(n-dk, m-1).
BigInt c_divisible_by_cycle_removal(long d, long n, long m);
/// c_d(N+d, m) = (N+1)^{rising d-1} c_d(N, m-1) + N^{rising d} c_d(N, m).
BigInt c_divisible_two_term(long d, long n, long m);

/// Permutations of n elements with m cycles, exactly e of them of even length.
/// Computed by both recurrences below; throws std::logic_error if they disagree.
BigInt c_even_marked(long n, long m, long e);
/// Sum over the length of the cycle through the largest element (odd lengths
/// 2t+1 for t >= 0, even lengths 2t for t >= 1).
BigInt c_even_marked_by_cycle_removal(long n, long m, long e);
/// c(n,m,e) = c(n-1,m-1,e) + (n-1) c(n-2,m-1,e-1) + (n-1)(n-2) c(n-2,m,e).
BigInt c_even_marked_three_term(long n, long m, long e);

enum class Identity {
  RisingD,        ///< (dn)! x^{rising n} = n! sum_m c_d(dn,m) (xd)^m
  AllOdd,         ///< sum_m 2^m c(n,m,0) = 2 n!
  SomeEven,       ///< sum_m 2^m sum_{e>=1} c(n,m,e) = (n-1) n!
  Mandev,         ///< sum_m 2^m sum_{e>=1} 2^e c(n,m,e), closed form by parity of n
  MandevMinusOne, ///< sum_m 2^m sum_{e>=1} (2^e - 1) c(n,m,e) = n! ceil(n/2) floor(n/2)
};

inline constexpr Identity all_identities[] = {Identity::RisingD, Identity::AllOdd, Identity::SomeEven,
                                              Identity::Mandev, Identity::MandevMinusOne};

std::string identity_name(Identity id);
/// Accepts rising_d, all_odd, some_even, mandev, mandev_minus_one.
Identity parse_identity(std::string_view name);

struct IdentityReport {
  std::string name;
  std::size_t cases_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the identity exactly for n = 1..max_n. For RisingD the cases are
/// d in {1,2,3}, d*n <= max_n and x in 1..5, cross-multiplied to stay in integers.
IdentityReport verify_identity(Identity id, long max_n);

} // namespace vwdg
