#include "vwdg/burnside.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vwdg/errors.hpp"

namespace vwdg {

namespace {

constexpr double full_sweep_limit = 2e7;

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --components_;
    }
  }

  void set_components(std::size_t n) { components_ = n; }
  std::size_t components() const { return components_; }

private:
  std::vector<std::size_t> parent_;
  std::size_t components_ = 0;
};

// The correction vector e: all ones except at sigma^{-1}(last); zero (and
// unused) when sigma fixes the last point.
Gf2Vector correction(const Permutation &sigma) {
  const std::size_t n = sigma.degree() - 1;
  const std::size_t i = sigma.inverse()(n);
  return i == n ? Gf2Vector::zero(n) : Gf2Vector::ones_except(n, i);
}

struct Prepared {
  Permutation sigma, bar;
  Gf2Vector e;

  explicit Prepared(const Permutation &s) : sigma(s), bar(s.bar()), e(correction(s)) {}
  bool contains(const Gf2Vector &v) const { return in_stabilized_set(sigma, v); }
  Gf2Vector move(const Gf2Vector &v, bool add_e) const { return add_e ? permute(bar, v) + e : permute(bar, v); }
};

double factorial_d(long n) {
  double r = 1;
  for (long i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

bool use_full_group(OrbitSweep sweep, double work) {
  if (sweep == OrbitSweep::Auto) return work <= full_sweep_limit;
  return sweep == OrbitSweep::FullGroup;
}

} // namespace

bool in_stabilized_set(const Permutation &sigma, const Gf2Vector &v) {
  const std::size_t last = sigma.degree() - 1;
  const std::size_t target = sigma(last);
  return target == last || !v.get(target);
}

namespace {

std::pair<Gf2Vector, Gf2Vector> type8_step(const Prepared &s, const Gf2Vector &v, const Gf2Vector &w) {
  return {s.move(v, !s.contains(v)), s.move(w, !s.contains(w))};
}

HTriple h_step(const Prepared &s, const Prepared &b, const HTriple &x) {
  const bool w_in = b.contains(x.w);
  const bool wp_in = b.contains(x.w_prime);
  if (s.contains(x.u)) return {s.move(x.u, false), b.move(x.w, !w_in), b.move(x.w_prime, !wp_in)};
  return {s.move(x.u, true), b.move(x.w, !w_in), b.move(x.w + x.w_prime, w_in != wp_in)};
}

} // namespace

std::pair<Gf2Vector, Gf2Vector> type8_action(const Permutation &sigma, const Gf2Vector &v, const Gf2Vector &w) {
  return type8_step(Prepared(sigma), v, w);
}

HTriple h_action(const Permutation &sigma, const Permutation &beta, const HTriple &x) {
  return h_step(Prepared(sigma), Prepared(beta), x);
}

BigInt burnside_type8_oracle(long n1, OrbitSweep sweep) {
  if (n1 < 1) throw std::invalid_argument("burnside_type8_oracle: n1 must be positive");
  const double points = std::ldexp(1.0, static_cast<int>(n1)) - 1;
  const double work = factorial_d(n1 + 1) * points * points;
  if (n1 > 8) throw BudgetExceeded("burnside_type8_oracle: n1 > 8 is outside the budget", work);
  const std::size_t n = static_cast<std::size_t>(n1);
  const std::uint64_t nonzero = (std::uint64_t{1} << n) - 1;
  // index(v, w) = (v-1) * nonzero + (w-1)
  DisjointSets sets(static_cast<std::size_t>(nonzero * nonzero));
  sets.set_components(static_cast<std::size_t>(nonzero * nonzero));
  const auto group = use_full_group(sweep, work) ? all_permutations(n + 1) : adjacent_transpositions(n + 1);
  for (const auto &element : group) {
    const Prepared sigma(element);
    for (std::uint64_t a = 1; a <= nonzero; ++a) {
      for (std::uint64_t b = 1; b <= nonzero; ++b) {
        const auto [v, w] = type8_step(sigma, Gf2Vector(n, a), Gf2Vector(n, b));
        if (v.is_zero() || w.is_zero()) throw std::logic_error("type8_action left the nonzero pairs");
        sets.unite((a - 1) * nonzero + (b - 1), (v.bits() - 1) * nonzero + (w.bits() - 1));
      }
    }
  }
  return sets.components();
}

BigInt burnside_h_oracle(long n, long m, OrbitSweep sweep) {
  if (n < 1 || m < 1) throw std::invalid_argument("burnside_h_oracle: dimensions must be positive");
  const double size = (std::ldexp(1.0, static_cast<int>(n)) - 1) * (std::ldexp(1.0, static_cast<int>(m)) - 1) *
                      std::ldexp(1.0, static_cast<int>(m));
  const double work = factorial_d(n + 1) * factorial_d(m + 1) * size;
  if (n > 5 || m > 5) throw BudgetExceeded("burnside_h_oracle: n or m > 5 is outside the budget", work);
  const std::size_t dn = static_cast<std::size_t>(n), dm = static_cast<std::size_t>(m);
  const std::uint64_t nu = (std::uint64_t{1} << dn) - 1, nw = (std::uint64_t{1} << dm) - 1, nwp = std::uint64_t{1} << dm;
  auto index = [&](std::uint64_t u, std::uint64_t w, std::uint64_t wp) { return ((u - 1) * nw + (w - 1)) * nwp + wp; };
  const std::size_t total = static_cast<std::size_t>(nu * nw * nwp);
  DisjointSets sets(total);
  sets.set_components(total);

  std::vector<std::pair<Prepared, Prepared>> group;
  if (use_full_group(sweep, work)) {
    const auto betas = all_permutations(dm + 1);
    for (const auto &s : all_permutations(dn + 1)) {
      const Prepared ps(s);
      for (const auto &b : betas) group.emplace_back(ps, Prepared(b));
    }
  } else {
    for (const auto &s : adjacent_transpositions(dn + 1)) group.emplace_back(Prepared(s), Prepared(Permutation::identity(dm + 1)));
    for (const auto &b : adjacent_transpositions(dm + 1)) group.emplace_back(Prepared(Permutation::identity(dn + 1)), Prepared(b));
  }
  for (const auto &[sigma, beta] : group) {
    for (std::uint64_t u = 1; u <= nu; ++u) {
      for (std::uint64_t w = 1; w <= nw; ++w) {
        for (std::uint64_t wp = 0; wp < nwp; ++wp) {
          const auto y = h_step(sigma, beta, {Gf2Vector(dn, u), Gf2Vector(dm, w), Gf2Vector(dm, wp)});
          if (y.u.is_zero() || y.w.is_zero()) throw std::logic_error("h_action left the admissible triples");
          sets.unite(index(u, w, wp), index(y.u.bits(), y.w.bits(), y.w_prime.bits()));
        }
      }
    }
  }
  return sets.components();
}

} // namespace vwdg
