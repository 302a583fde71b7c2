#include <doctest.h>

#include "census.hpp"
#include "vwdg/cycles.hpp"

using namespace vwdg;

TEST_SUITE("cyclecount") {

TEST_CASE("small values") {
  CHECK(stirling_c(3, 2) == 3);
  CHECK(c_divisible(2, 4, 2) == 3);
  // Two cycles in S_4: type (3,1) has no even cycle, type (2,2) has two.
  CHECK(c_even_marked(4, 2, 0) == 8);
  CHECK(c_even_marked(4, 2, 1) == 0);
  CHECK(c_even_marked(4, 2, 2) == 3);
  for (long n = 0; n <= 10; ++n) CHECK(stirling_c(n, n) == 1);
  for (long n = 1; n <= 10; ++n) CHECK(stirling_c(n, 0) == 0);
  for (long m = 0; m <= 5; ++m) CHECK(c_divisible(2, 5, m) == 0);
  CHECK(stirling_c(-1, 0) == 0);
  CHECK(c_even_marked(3, 2, -1) == 0);
  CHECK_THROWS(c_divisible(0, 2, 1));
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(3, 0) == 1);
  CHECK(rising_factorial(2, 3) == 24);
  for (long n = 0; n <= 12; ++n) CHECK(rising_factorial(1, n) == factorial(n));
  CHECK(rising_factorial(-2, 3) == 0);
  CHECK_THROWS(rising_factorial(1, -1));
}

TEST_CASE("cycle counts generate rising factorials") {
  for (long n = 0; n <= 8; ++n) {
    for (long x = 1; x <= 5; ++x) {
      BigInt sum = 0, power = 1;
      for (long m = 0; m <= n; ++m, power *= x) sum += stirling_c(n, m) * power;
      REQUIRE(sum == rising_factorial(x, n));
    }
  }
}

TEST_CASE("census of S_n") {
  for (int n = 0; n <= 7; ++n) {
    const auto t = census::tally(n);
    for (int m = 0; m <= n; ++m) {
      REQUIRE(stirling_c(n, m) == census::get(t.by_cycles, m));
      REQUIRE(stirling_c_by_cycle_removal(n, m) == census::get(t.by_cycles, m));
      for (int d = 1; d <= std::max(n, 1); ++d) REQUIRE(c_divisible(d, n, m) == census::get(t.divisible, d, m));
      for (int e = 0; e <= m; ++e) REQUIRE(c_even_marked(n, m, e) == census::get(t.even_marked, m, e));
    }
  }
}

TEST_CASE("partition by number of even cycles") {
  for (long n = 0; n <= 12; ++n) {
    for (long m = 0; m <= n; ++m) {
      BigInt sum = 0;
      for (long e = 0; e <= m; ++e) sum += c_even_marked(n, m, e);
      REQUIRE(sum == stirling_c(n, m));
      for (long e = n / 2 + 1; e <= m; ++e) REQUIRE(c_even_marked(n, m, e) == 0);
    }
  }
  CHECK(c_divisible(1, 9, 4) == stirling_c(9, 4));
}

TEST_CASE("both recurrences agree") {
  for (long d = 1; d <= 4; ++d) {
    for (long n = 0; n <= 16; ++n) {
      for (long m = 0; m <= n; ++m) REQUIRE(c_divisible_by_cycle_removal(d, n, m) == c_divisible_two_term(d, n, m));
    }
  }
  for (long n = 0; n <= 12; ++n) {
    for (long m = 0; m <= n; ++m) {
      for (long e = 0; e <= m; ++e) REQUIRE(c_even_marked_by_cycle_removal(n, m, e) == c_even_marked_three_term(n, m, e));
    }
  }
}

TEST_CASE("identities at hand-checked points") {
  // n = 3: the 3-cycles and the identity have no even cycle.
  CHECK(2 * c_even_marked(3, 1, 0) + 8 * c_even_marked(3, 3, 0) == 12);
  // n = 2: only the transposition has an even cycle.
  BigInt mandev = 0;
  for (long m = 1; m <= 2; ++m) {
    for (long e = 1; e <= m; ++e) mandev += (BigInt(1) << m) * (BigInt(1) << e) * c_even_marked(2, m, e);
  }
  CHECK(mandev == 4);
  CHECK(c_divisible(2, 2, 1) == 1);
}

TEST_CASE("identity sweeps") {
  const std::pair<Identity, long> sweeps[] = {{Identity::RisingD, 12},
                                              {Identity::AllOdd, 10},
                                              {Identity::SomeEven, 10},
                                              {Identity::Mandev, 12},
                                              {Identity::MandevMinusOne, 12}};
  for (const auto &[id, max_n] : sweeps) {
    const auto report = verify_identity(id, max_n);
    INFO(report.name);
    CHECK(report.ok());
    CHECK(report.cases_checked > 0);
  }
  CHECK(verify_identity(Identity::RisingD, 12).cases_checked == 5 * (12 + 6 + 4));
}

TEST_CASE("identity names") {
  for (auto id : all_identities) CHECK(parse_identity(identity_name(id)) == id);
  CHECK_THROWS_AS(parse_identity("rising"), std::invalid_argument);
}

}
