#include <doctest.h>

#include <algorithm>

#include "census.hpp"
#include "vwdg/permutation.hpp"

using vwdg::Permutation;

TEST_SUITE("gf2core") {

TEST_CASE("parse and print one-line notation") {
  const auto s = Permutation::parse("2,3,1");
  CHECK(s(0) == 1);
  CHECK(s(2) == 0);
  CHECK(s.to_string() == "2,3,1");
  CHECK(s.one_line() == std::vector<int>{2, 3, 1});
  CHECK_THROWS(Permutation::parse("1,1,2"));
  CHECK_THROWS(Permutation::parse("0,1"));
  CHECK_THROWS(Permutation::parse("1,x"));
  CHECK_THROWS(Permutation::from_one_line({1, 3}));
}

TEST_CASE("composition and inverse") {
  const auto s = Permutation::parse("2,3,1");
  const auto t = Permutation::parse("2,1,3");
  const auto st = s * t;
  for (std::size_t i = 0; i < 3; ++i) CHECK(st(i) == s(t(i)));
  CHECK((s * s.inverse()).is_identity());
  CHECK((s.inverse() * s).is_identity());
  CHECK(Permutation::transposition(4, 1, 3).to_string() == "1,4,3,2");
}

TEST_CASE("bar reduction") {
  // s(3) = 1, s(0) = 3: the image of the last point replaces it.
  const auto s = Permutation::parse("4,3,1,2");
  CHECK(s.bar().to_string() == "2,3,1");
  CHECK(Permutation::parse("2,3,1,4").bar().to_string() == "2,3,1");
  CHECK(Permutation::parse("1,2,4,3").bar().is_identity());
  for (const auto &p : vwdg::all_permutations(5)) {
    const auto b = p.bar();
    REQUIRE(b.degree() == 4);
    REQUIRE((b * b.inverse()).is_identity());
  }
}

TEST_CASE("cycle statistics agree with direct decomposition") {
  for (const auto &p : vwdg::all_permutations(5)) {
    std::vector<int> images(p.images().begin(), p.images().end());
    auto expected = census::cycle_lengths(images);
    auto got = p.cycle_lengths();
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    REQUIRE(std::vector<std::size_t>(expected.begin(), expected.end()) == got);
    REQUIRE(p.cycle_count() == expected.size());
  }
}

TEST_CASE("group enumeration") {
  CHECK(vwdg::all_permutations(4).size() == 24);
  CHECK(vwdg::all_permutations(1).size() == 1);
  CHECK(vwdg::adjacent_transpositions(4).size() == 3);
  CHECK(vwdg::adjacent_transpositions(1).empty());
}

}
