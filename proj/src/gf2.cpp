#include "vwdg/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace vwdg {

Gf2Vector::Gf2Vector(std::size_t dim, std::uint64_t bits) : dim_(static_cast<std::uint32_t>(dim)), bits_(bits) {
  if (dim == 0 || dim > max_dim) {
    throw std::invalid_argument("Gf2Vector: dimension must be in 1.." + std::to_string(max_dim));
  }
  if (bits >> dim) {
    throw std::invalid_argument("Gf2Vector: bits set beyond dimension");
  }
}

Gf2Vector Gf2Vector::ones(std::size_t dim) {
  Gf2Vector v(dim);
  v.bits_ = (std::uint64_t{1} << dim) - 1;
  return v;
}

Gf2Vector Gf2Vector::ones_except(std::size_t dim, std::size_t i) {
  auto v = ones(dim);
  v.set(i, false);
  return v;
}

Gf2Vector Gf2Vector::unit(std::size_t dim, std::size_t i) {
  Gf2Vector v(dim);
  v.set(i, true);
  return v;
}

Gf2Vector Gf2Vector::parse(std::string_view text) {
  if (text.empty() || text.size() > max_dim) {
    throw std::invalid_argument("Gf2Vector: bit string must have 1.." + std::to_string(max_dim) + " characters");
  }
  Gf2Vector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument("Gf2Vector: invalid character in bit string '" + std::string(text) + "'");
    }
    v.set(i, text[i] == '1');
  }
  return v;
}

std::size_t Gf2Vector::popcount() const { return static_cast<std::size_t>(std::popcount(bits_)); }

bool Gf2Vector::get(std::size_t i) const {
  if (i >= dim_) throw std::out_of_range("Gf2Vector: coordinate out of range");
  return (bits_ & mask(i)) != 0;
}

void Gf2Vector::set(std::size_t i, bool value) {
  if (i >= dim_) throw std::out_of_range("Gf2Vector: coordinate out of range");
  if (value) {
    bits_ |= mask(i);
  } else {
    bits_ &= ~mask(i);
  }
}

std::string Gf2Vector::to_string() const {
  std::string s(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

Gf2Vector operator+(const Gf2Vector &a, const Gf2Vector &b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("Gf2Vector: dimension mismatch in addition");
  }
  return Gf2Vector(a.dim(), a.bits() ^ b.bits());
}

Gf2Vector &operator+=(Gf2Vector &a, const Gf2Vector &b) {
  a = a + b;
  return a;
}

Gf2Vector permute(const Permutation &sigma, const Gf2Vector &v) {
  if (sigma.degree() != v.dim()) {
    throw std::invalid_argument("permute: permutation degree " + std::to_string(sigma.degree()) +
                                " does not match vector dimension " + std::to_string(v.dim()));
  }
  Gf2Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out.set(i, v.get(sigma(i)));
  }
  return out;
}

Gf2Matrix::Gf2Matrix(std::size_t n) : rows_(n, 0) {
  if (n > max_size) throw std::invalid_argument("Gf2Matrix: size exceeds 64");
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = std::uint64_t{1} << i;
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>> &rows) {
  Gf2Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw std::invalid_argument("Gf2Matrix: rows must form a square matrix");
    for (std::size_t c = 0; c < rows.size(); ++c) m.set(r, c, rows[r][c] & 1);
  }
  return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  if (c >= rows_.size()) throw std::out_of_range("Gf2Matrix: column out of range");
  if (value) {
    rows_.at(r) |= std::uint64_t{1} << c;
  } else {
    rows_.at(r) &= ~(std::uint64_t{1} << c);
  }
}

Gf2Matrix Gf2Matrix::principal_submatrix(std::uint64_t subset) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((subset >> i) & 1U) idx.push_back(i);
  }
  Gf2Matrix sub(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) sub.set(r, c, get(idx[r], idx[c]));
  }
  return sub;
}

std::uint64_t Gf2Matrix::apply(std::uint64_t column) const {
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (std::popcount(rows_[r] & column) & 1) out |= std::uint64_t{1} << r;
  }
  return out;
}

Gf2Matrix operator*(const Gf2Matrix &a, const Gf2Matrix &b) {
  if (a.size() != b.size()) throw std::invalid_argument("Gf2Matrix: size mismatch in product");
  Gf2Matrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a.get(r, k)) acc ^= b.rows_[k];
    }
    out.rows_[r] = acc;
  }
  return out;
}

int det(const Gf2Matrix &m) {
  std::vector<std::uint64_t> rows(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) rows[r] = m.row(r);
  for (std::size_t col = 0; col < rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = col;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) return 0;
    std::swap(rows[col], rows[pivot]);
    for (std::size_t r = col + 1; r < rows.size(); ++r) {
      if (rows[r] & bit) rows[r] ^= rows[col];
    }
  }
  return 1;
}

Gf2Matrix inverse(const Gf2Matrix &m) {
  const std::size_t n = m.size();
  std::vector<std::uint64_t> left(n), right(n);
  for (std::size_t r = 0; r < n; ++r) {
    left[r] = m.row(r);
    right[r] = std::uint64_t{1} << r;
  }
  for (std::size_t col = 0; col < n; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = col;
    while (pivot < n && !(left[pivot] & bit)) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: matrix is singular over GF(2)");
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && (left[r] & bit)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
    }
  }
  Gf2Matrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, (right[r] >> c) & 1U);
  }
  return out;
}

bool all_principal_minors_one(const Gf2Matrix &m) {
  const std::size_t n = m.size();
  if (n >= 63) throw std::invalid_argument("all_principal_minors_one: matrix too large");
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    if (det(m.principal_submatrix(subset)) != 1) return false;
  }
  return true;
}

} // namespace vwdg
