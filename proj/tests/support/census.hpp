#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace census {

// Cycle-type tallies over all of S_n, by direct enumeration.
struct Tally {
  std::map<int, std::uint64_t> by_cycles;                        // m -> count
  std::map<std::tuple<int, int>, std::uint64_t> divisible;       // (d, m) -> count
  std::map<std::tuple<int, int>, std::uint64_t> even_marked;     // (m, e) -> count
};

Tally tally(int n);

std::uint64_t get(const std::map<int, std::uint64_t> &t, int key);
std::uint64_t get(const std::map<std::tuple<int, int>, std::uint64_t> &t, int a, int b);

// Cycle lengths of a permutation given as images of 0..n-1.
std::vector<int> cycle_lengths(const std::vector<int> &images);

} // namespace census
