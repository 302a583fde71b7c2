#include "vwdg/cycles.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace vwdg {

namespace {

using Key = std::tuple<long, long, long>;

struct Tables {
  std::map<long, BigInt> factorial;
  std::map<Key, BigInt> stirling;
  std::map<Key, BigInt> stirling_removal;
  std::map<Key, BigInt> divisible_removal;
  std::map<Key, BigInt> divisible_two_term;
  std::map<Key, BigInt> even_removal;
  std::map<Key, BigInt> even_three_term;
};

Tables &tables() {
  thread_local Tables t;
  return t;
}

// (n-1)! / (n-len)!, the number of ways to fill a cycle of length len through a fixed element.
BigInt falling_ratio(long n, long len) {
  BigInt r = 1;
  for (long i = n - len + 1; i <= n - 1; ++i) r *= i;
  return r;
}

template <class F> BigInt memo(std::map<Key, BigInt> &table, Key key, F &&compute) {
  if (auto it = table.find(key); it != table.end()) return it->second;
  BigInt v = compute();
  table.emplace(key, v);
  return v;
}

BigInt pow2(long k) { return BigInt(1) << k; }

} // namespace

BigInt factorial(long n) {
  if (n < 0) return 0;
  auto &t = tables().factorial;
  if (auto it = t.find(n); it != t.end()) return it->second;
  BigInt v = n == 0 ? BigInt(1) : factorial(n - 1) * n;
  t.emplace(n, v);
  return v;
}

BigInt rising_factorial(const BigInt &x, long n) {
  if (n < 0) throw std::invalid_argument("rising_factorial: n must be nonnegative");
  BigInt r = 1;
  for (long i = 0; i < n; ++i) r *= x + i;
  return r;
}

BigInt stirling_c(long n, long m) {
  if (n < 0 || m < 0) return 0;
  if (n == 0) return m == 0 ? 1 : 0;
  if (m == 0) return 0;
  return memo(tables().stirling, {n, m, 0}, [&] { return stirling_c(n - 1, m - 1) + (n - 1) * stirling_c(n - 1, m); });
}

BigInt stirling_c_by_cycle_removal(long n, long m) {
  if (n < 0 || m < 0) return 0;
  if (n == 0) return m == 0 ? 1 : 0;
  return memo(tables().stirling_removal, {n, m, 0}, [&] {
    BigInt sum = 0;
    for (long k = 1; k <= n; ++k) sum += falling_ratio(n, k) * stirling_c_by_cycle_removal(n - k, m - 1);
    return sum;
  });
}

BigInt c_divisible_by_cycle_removal(long d, long n, long m) {
  if (d < 1) throw std::invalid_argument("c_divisible: d must be positive");
  if (n < 0 || m < 0 || n % d != 0) return 0;
  if (n == 0) return m == 0 ? 1 : 0;
  return memo(tables().divisible_removal, {d, n, m}, [&] {
    BigInt sum = 0;
    for (long k = 1; d * k <= n; ++k) sum += falling_ratio(n, d * k) * c_divisible_by_cycle_removal(d, n - d * k, m - 1);
    return sum;
  });
}

BigInt c_divisible_two_term(long d, long n, long m) {
  if (d < 1) throw std::invalid_argument("c_divisible: d must be positive");
  if (n < 0 || m < 0 || n % d != 0) return 0;
  if (n == 0) return m == 0 ? 1 : 0;
  return memo(tables().divisible_two_term, {d, n, m}, [&] {
    const long base = n - d;
    return rising_factorial(base + 1, d - 1) * c_divisible_two_term(d, base, m - 1) +
           rising_factorial(base, d) * c_divisible_two_term(d, base, m);
  });
}

BigInt c_divisible(long d, long n, long m) {
  auto a = c_divisible_by_cycle_removal(d, n, m);
  auto b = c_divisible_two_term(d, n, m);
  if (a != b) {
    throw std::logic_error("c_divisible: recurrences disagree at (d,n,m) = (" + std::to_string(d) + "," +
                           std::to_string(n) + "," + std::to_string(m) + ")");
  }
  return a;
}

BigInt c_even_marked_by_cycle_removal(long n, long m, long e) {
  if (n < 0 || m < 0 || e < 0) return 0;
  if (n == 0) return (m == 0 && e == 0) ? 1 : 0;
  return memo(tables().even_removal, {n, m, e}, [&] {
    BigInt sum = 0;
    for (long t = 0; 2 * t + 1 <= n; ++t) {
      sum += falling_ratio(n, 2 * t + 1) * c_even_marked_by_cycle_removal(n - 2 * t - 1, m - 1, e);
    }
    for (long t = 1; 2 * t <= n; ++t) {
      sum += falling_ratio(n, 2 * t) * c_even_marked_by_cycle_removal(n - 2 * t, m - 1, e - 1);
    }
    return sum;
  });
}

BigInt c_even_marked_three_term(long n, long m, long e) {
  if (n < 0 || m < 0 || e < 0) return 0;
  if (n == 0) return (m == 0 && e == 0) ? 1 : 0;
  return memo(tables().even_three_term, {n, m, e}, [&] {
    return c_even_marked_three_term(n - 1, m - 1, e) + BigInt(n - 1) * c_even_marked_three_term(n - 2, m - 1, e - 1) +
           BigInt(n - 1) * (n - 2) * c_even_marked_three_term(n - 2, m, e);
  });
}

BigInt c_even_marked(long n, long m, long e) {
  auto a = c_even_marked_by_cycle_removal(n, m, e);
  auto b = c_even_marked_three_term(n, m, e);
  if (a != b) {
    throw std::logic_error("c_even_marked: recurrences disagree at (n,m,e) = (" + std::to_string(n) + "," +
                           std::to_string(m) + "," + std::to_string(e) + ")");
  }
  return a;
}

std::string identity_name(Identity id) {
  switch (id) {
  case Identity::RisingD: return "rising_d";
  case Identity::AllOdd: return "all_odd";
  case Identity::SomeEven: return "some_even";
  case Identity::Mandev: return "mandev";
  case Identity::MandevMinusOne: return "mandev_minus_one";
  }
  throw std::logic_error("identity_name: unknown identity");
}

Identity parse_identity(std::string_view name) {
  for (auto id : all_identities) {
    if (identity_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

namespace {

// sum_m 2^m sum_{e in [e_lo, m]} weight(e) c(n,m,e)
template <class W> BigInt weighted_even_sum(long n, long e_lo, W &&weight) {
  BigInt total = 0;
  for (long m = 1; m <= n; ++m) {
    BigInt inner = 0;
    for (long e = e_lo; e <= m; ++e) inner += weight(e) * c_even_marked(n, m, e);
    total += pow2(m) * inner;
  }
  return total;
}

void record(IdentityReport &r, bool holds, const std::string &where, const BigInt &lhs, const BigInt &rhs) {
  ++r.cases_checked;
  if (!holds) r.violations.push_back(where + ": " + lhs.str() + " != " + rhs.str());
}

} // namespace

IdentityReport verify_identity(Identity id, long max_n) {
  IdentityReport r{identity_name(id), 0, {}};
  switch (id) {
  case Identity::RisingD:
    for (long d = 1; d <= 3; ++d) {
      for (long n = 1; d * n <= max_n; ++n) {
        for (long x = 1; x <= 5; ++x) {
          const BigInt lhs = factorial(d * n) * rising_factorial(x, n);
          BigInt sum = 0;
          for (long m = 0; m <= n; ++m) sum += c_divisible(d, d * n, m) * boost::multiprecision::pow(BigInt(x * d), static_cast<unsigned>(m));
          const BigInt rhs = factorial(n) * sum;
          record(r, lhs == rhs, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " x=" + std::to_string(x), lhs, rhs);
        }
      }
    }
    break;
  case Identity::AllOdd:
    for (long n = 1; n <= max_n; ++n) {
      BigInt lhs = 0;
      for (long m = 1; m <= n; ++m) lhs += pow2(m) * c_even_marked(n, m, 0);
      const BigInt rhs = 2 * factorial(n);
      record(r, lhs == rhs, "n=" + std::to_string(n), lhs, rhs);
    }
    break;
  case Identity::SomeEven:
    for (long n = 1; n <= max_n; ++n) {
      const BigInt lhs = weighted_even_sum(n, 1, [](long) { return BigInt(1); });
      const BigInt rhs = (n - 1) * factorial(n);
      record(r, lhs == rhs, "n=" + std::to_string(n), lhs, rhs);
    }
    break;
  case Identity::Mandev:
    for (long n = 1; n <= max_n; ++n) {
      const BigInt lhs = weighted_even_sum(n, 1, [](long e) { return pow2(e); });
      const long k = n / 2;
      const BigInt rhs = n % 2 == 0 ? factorial(2 * k) * (k * k + 2 * k - 1) : factorial(2 * k + 1) * k * (k + 3);
      record(r, lhs == rhs, "n=" + std::to_string(n), lhs, rhs);
    }
    break;
  case Identity::MandevMinusOne:
    for (long n = 1; n <= max_n; ++n) {
      const BigInt lhs = weighted_even_sum(n, 1, [](long e) { return pow2(e) - 1; });
      const BigInt rhs = factorial(n) * ((n + 1) / 2) * (n / 2);
      record(r, lhs == rhs, "n=" + std::to_string(n), lhs, rhs);
    }
    break;
  }
  return r;
}

} // namespace vwdg
