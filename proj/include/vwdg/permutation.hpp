#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vwdg {

/// A permutation of {0, ..., degree-1}, stored as its image sequence.
///
/// Composition follows function notation: (a * b)(i) = a(b(i)).
/// Text form is one-line image notation, 1-indexed ("2,3,1" is the cycle (123)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t degree);
  /// Transposition of positions a and b.
  static Permutation transposition(std::size_t degree, std::size_t a, std::size_t b);
  /// Parses "2,3,1" (1-indexed images).
  static Permutation parse(std::string_view text);
  static Permutation from_one_line(const std::vector<int> &one_based);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }

  Permutation inverse() const;
  bool is_identity() const;

  /// Reduction S_{n+1} -> S_n that redirects the preimage of the last point:
  /// bar(t) = s(t) if s(t) != n, else s(n).
  Permutation bar() const;

  /// Number of cycles, fixed points included.
  std::size_t cycle_count() const;
  std::vector<std::size_t> cycle_lengths() const;

  std::vector<int> one_line() const;
  std::string to_string() const;

  const std::vector<std::uint8_t> &images() const { return images_; }

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<std::uint8_t> images_;
};

/// All permutations of the given degree in lexicographic order of image sequences.
std::vector<Permutation> all_permutations(std::size_t degree);

/// Adjacent transpositions (0 1), (1 2), ..., which generate S_degree.
std::vector<Permutation> adjacent_transpositions(std::size_t degree);

} // namespace vwdg
