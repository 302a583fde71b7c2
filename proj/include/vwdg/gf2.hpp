#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vwdg/permutation.hpp"

namespace vwdg {

/// Fixed-dimension vector over GF(2), at most 63 coordinates.
///
/// Coordinate 0 is the most significant stored bit, so the natural integer
/// order of `bits()` is the lexicographic order of the bit-string form
/// ("101" = coordinates 1,0,1).
class Gf2Vector {
public:
  static constexpr std::size_t max_dim = 63;

  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t dim, std::uint64_t bits = 0);

  static Gf2Vector zero(std::size_t dim) { return Gf2Vector(dim); }
  static Gf2Vector ones(std::size_t dim);
  /// All coordinates 1 except coordinate `i`.
  static Gf2Vector ones_except(std::size_t dim, std::size_t i);
  static Gf2Vector unit(std::size_t dim, std::size_t i);
  /// Parses a bit string, leftmost character is coordinate 0.
  static Gf2Vector parse(std::string_view text);

  std::size_t dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  std::size_t popcount() const;

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);

  std::string to_string() const;

  friend bool operator==(const Gf2Vector &, const Gf2Vector &) = default;
  friend std::strong_ordering operator<=>(const Gf2Vector &a, const Gf2Vector &b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

private:
  std::uint64_t mask(std::size_t i) const { return std::uint64_t{1} << (dim_ - 1 - i); }

  std::uint32_t dim_ = 0;
  std::uint64_t bits_ = 0;
};

/// Coordinatewise sum mod 2. Throws std::invalid_argument on dimension mismatch.
Gf2Vector operator+(const Gf2Vector &a, const Gf2Vector &b);
Gf2Vector &operator+=(Gf2Vector &a, const Gf2Vector &b);

/// result_i = v_{sigma(i)}.
///
/// With this convention permute(s * t, v) == permute(t, permute(s, v)).
Gf2Vector permute(const Permutation &sigma, const Gf2Vector &v);

/// Square matrix over GF(2), rows stored as bit masks (bit c of row r is entry (r, c)).
class Gf2Matrix {
public:
  static constexpr std::size_t max_size = 64;

  Gf2Matrix() = default;
  explicit Gf2Matrix(std::size_t n);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(const std::vector<std::vector<int>> &rows);

  std::size_t size() const { return rows_.size(); }
  bool get(std::size_t r, std::size_t c) const { return (rows_.at(r) >> c) & 1U; }
  void set(std::size_t r, std::size_t c, bool value);
  std::uint64_t row(std::size_t r) const { return rows_.at(r); }

  /// Submatrix on the rows and columns whose bits are set in `subset`.
  Gf2Matrix principal_submatrix(std::uint64_t subset) const;

  /// Matrix-vector product, vector given as a column bit mask.
  std::uint64_t apply(std::uint64_t column) const;

  friend Gf2Matrix operator*(const Gf2Matrix &a, const Gf2Matrix &b);
  friend bool operator==(const Gf2Matrix &, const Gf2Matrix &) = default;

private:
  std::vector<std::uint64_t> rows_;
};

int det(const Gf2Matrix &m);

/// Throws std::domain_error when `m` is singular.
Gf2Matrix inverse(const Gf2Matrix &m);

/// True when every principal minor equals 1.
bool all_principal_minors_one(const Gf2Matrix &m);

} // namespace vwdg
