#include "vwdg/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace vwdg {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("Permutation: image sequence is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > 255) {
    throw std::invalid_argument("Permutation: degree too large");
  }
  std::vector<std::uint8_t> im(degree);
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t degree, std::size_t a, std::size_t b) {
  auto p = identity(degree);
  if (a >= degree || b >= degree) {
    throw std::out_of_range("Permutation::transposition: point out of range");
  }
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int> &one_based) {
  std::vector<std::uint8_t> im;
  im.reserve(one_based.size());
  for (int x : one_based) {
    if (x < 1 || x > static_cast<int>(one_based.size())) {
      throw std::invalid_argument("Permutation: image " + std::to_string(x) + " out of range");
    }
    im.push_back(static_cast<std::uint8_t>(x - 1));
  }
  return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("Permutation: cannot parse '" + std::string(text) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_one_line(values);
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<std::uint8_t>(i);
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::bar() const {
  if (images_.empty()) {
    throw std::invalid_argument("Permutation::bar: empty permutation");
  }
  const auto last = static_cast<std::uint8_t>(images_.size() - 1);
  std::vector<std::uint8_t> im(images_.size() - 1);
  for (std::size_t t = 0; t < im.size(); ++t) {
    im[t] = images_[t] != last ? images_[t] : images_[last];
  }
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::size_t Permutation::cycle_count() const { return cycle_lengths().size(); }

std::vector<int> Permutation::one_line() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (auto x : images_) out.push_back(static_cast<int>(x) + 1);
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i] + 1);
  }
  return s;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("Permutation: degree mismatch in composition");
  }
  std::vector<std::uint8_t> im(a.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<Permutation> out;
  auto im = Permutation::identity(degree).images();
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<Permutation> adjacent_transpositions(std::size_t degree) {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i + 1 < degree; ++i) {
    out.push_back(Permutation::transposition(degree, i, i + 1));
  }
  return out;
}

} // namespace vwdg
