#include <doctest.h>

#include <set>

#include "graphs.hpp"
#include "vwdg/dag.hpp"
#include "vwdg/digraph.hpp"
#include "vwdg/errors.hpp"

using namespace vwdg;
using testing_graphs::make;

namespace {

// Acyclicity by transitive closure.
bool closure_acyclic(std::size_t m, std::uint64_t edges) {
  std::vector<std::uint64_t> reach(m, 0);
  for (std::size_t i = 0, bit = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if ((edges >> bit++) & 1U) reach[i] |= std::uint64_t{1} << j;
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if ((reach[i] >> k) & 1U) reach[i] |= reach[k];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if ((reach[i] >> i) & 1U) return false;
  }
  return true;
}

// Calls visit on every vector matrix over omega.
template <class F> void for_each_vector_matrix(const DimensionFunction &omega, F &&visit) {
  const std::size_t m = omega.vertex_count();
  std::size_t total_bits = 0;
  for (std::size_t i = 0; i < m; ++i) total_bits += omega[i] * m;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << total_bits); ++code) {
    VectorMatrix a(omega);
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        a.set(i, j, Gf2Vector(omega[i], rest & ((std::uint64_t{1} << omega[i]) - 1)));
        rest >>= omega[i];
      }
    }
    visit(a);
  }
}

std::vector<DimensionFunction> shapes_up_to(std::size_t max_m, std::size_t max_dim) {
  std::vector<DimensionFunction> out;
  std::vector<std::size_t> dims;
  std::function<void()> rec = [&] {
    if (!dims.empty()) out.emplace_back(dims);
    if (dims.size() == max_m) return;
    for (std::size_t d = 1; d <= max_dim; ++d) {
      dims.push_back(d);
      rec();
      dims.pop_back();
    }
  };
  rec();
  return out;
}

} // namespace

TEST_SUITE("vwdigraph") {

TEST_CASE("labeled DAG listing matches closure scan and recurrence") {
  for (std::size_t m = 0; m <= 4; ++m) {
    std::uint64_t scanned = 0;
    const std::size_t slots = m * (m - (m ? 1 : 0));
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << slots); ++e) scanned += closure_acyclic(m, e);
    CHECK(scanned == count_labeled_dags(m));
  }
  const std::uint64_t expected[] = {1, 1, 3, 25, 543, 29281, 3781503};
  CHECK_THROWS_AS(for_each_dag(0, [](const SmallDigraph &) {}), std::invalid_argument);
  for (std::size_t m = 1; m <= max_listed_dag_vertices; ++m) {
    std::set<std::vector<std::uint8_t>> seen;
    std::size_t listed = 0;
    for_each_dag(m, [&](const SmallDigraph &g) {
      ++listed;
      if (m <= 5) seen.insert(g.out_mask);
    });
    CHECK(listed == expected[m]);
    CHECK(count_labeled_dags(m) == expected[m]);
    if (m <= 5) CHECK(seen.size() == listed);
  }
  CHECK_THROWS_AS(for_each_dag(7, [](const SmallDigraph &) {}), std::invalid_argument);
}

TEST_CASE("dimension function") {
  const auto omega = DimensionFunction::parse("2,3,3");
  CHECK(omega.vertex_count() == 3);
  CHECK(omega[1] == 3);
  CHECK(omega.total_dimension() == 8);
  CHECK(omega.to_string() == "2,3,3");
  CHECK_THROWS(DimensionFunction::parse("2,0"));
  CHECK_THROWS(DimensionFunction::parse(""));
  CHECK_THROWS(DimensionFunction::parse("1,a"));
}

TEST_CASE("graph invariants") {
  VWDigraph g({2, 1});
  CHECK_THROWS(g.set_weight(0, 0, Gf2Vector::parse("11")));
  CHECK_THROWS(g.set_weight(0, 1, Gf2Vector::parse("1")));
  g.set_weight(0, 1, Gf2Vector::parse("11"));
  CHECK(g.has_edge(0, 1));
  g.set_weight(0, 1, Gf2Vector::zero(2));
  CHECK(g.edge_count() == 0);
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(VWDigraph({1, 1, 1})));
  CHECK(is_acyclic(testing_graphs::worked_example()));
  CHECK_FALSE(is_acyclic(make({1, 1}, {{1, 2, "1"}, {2, 1, "1"}})));
  CHECK_FALSE(is_acyclic(make({1, 1, 1}, {{1, 2, "1"}, {2, 3, "1"}, {3, 1, "1"}})));
}

TEST_CASE("adjacency and reduced matrices") {
  const auto empty = adjacency_matrix(VWDigraph({1, 2}));
  CHECK(empty == VectorMatrix(DimensionFunction{1, 2}));

  const auto single = adjacency_matrix(make({2, 1}, {{1, 2, "11"}}));
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) nonzero += !single.at(i, j).is_zero();
  }
  CHECK(nonzero == 1);
  CHECK(single.at(0, 1) == Gf2Vector::parse("11"));

  const auto reduced = to_reduced_matrix(VWDigraph({1, 1}));
  CHECK(reduced.at(0, 0) == Gf2Vector::parse("1"));
  CHECK(reduced.at(1, 1) == Gf2Vector::parse("1"));
  CHECK(reduced.at(0, 1).is_zero());

  const auto fig = to_reduced_matrix(testing_graphs::worked_example());
  CHECK(fig.at(0, 0) == Gf2Vector::parse("11"));
  CHECK(fig.at(3, 3) == Gf2Vector::parse("111"));
  CHECK(fig.at(0, 1) == Gf2Vector::parse("10"));
  CHECK(fig.at(3, 2) == Gf2Vector::parse("101"));
  CHECK(fig.at(2, 3).is_zero());
  CHECK(is_in_M_omega(fig));

  CHECK_THROWS(to_reduced_matrix(make({1, 1}, {{1, 2, "1"}, {2, 1, "1"}})));
}

TEST_CASE("specialize") {
  VectorMatrix ones({2, 3});
  ones.set(0, 0, Gf2Vector::ones(2));
  ones.set(1, 1, Gf2Vector::ones(3));
  CHECK(specialize(ones, {1, 2}) == Gf2Matrix::identity(2));

  VectorMatrix a = ones;
  a.set(0, 1, Gf2Vector::parse("10"));
  CHECK(specialize(a, {0, 0}) == Gf2Matrix::from_rows({{1, 1}, {0, 1}}));
  CHECK(specialize(a, {1, 0}) == Gf2Matrix::from_rows({{1, 0}, {0, 1}}));
  CHECK_THROWS(specialize(a, {2, 0}));
  CHECK_THROWS(specialize(a, {0}));
}

TEST_CASE("membership in M_omega") {
  VectorMatrix diag({2, 1});
  diag.set(0, 0, Gf2Vector::ones(2));
  diag.set(1, 1, Gf2Vector::ones(1));
  CHECK(is_in_M_omega(diag));
  diag.set(0, 0, Gf2Vector::parse("10"));
  CHECK_FALSE(is_in_M_omega(diag));

  std::size_t members = 0;
  for_each_vector_matrix(DimensionFunction{1, 1}, [&](const VectorMatrix &a) { members += is_in_M_omega(a); });
  CHECK(members == 3);
}

TEST_CASE("membership is all-ones diagonal plus acyclic support") {
  for (const auto &omega : shapes_up_to(3, 2)) {
    const std::size_t m = omega.vertex_count();
    for_each_vector_matrix(omega, [&](const VectorMatrix &a) {
      bool diagonal = true;
      std::uint64_t support = 0;
      for (std::size_t i = 0, bit = 0; i < m; ++i) {
        diagonal = diagonal && a.at(i, i) == Gf2Vector::ones(omega[i]);
        for (std::size_t j = 0; j < m; ++j) {
          if (i == j) continue;
          if (!a.at(i, j).is_zero()) support |= std::uint64_t{1} << bit;
          ++bit;
        }
      }
      REQUIRE(is_in_M_omega(a) == (diagonal && closure_acyclic(m, support)));
    });
  }
}

TEST_CASE("round trips through the reduced matrix") {
  for (const auto &omega : {DimensionFunction{1, 2}, DimensionFunction{2, 2}, DimensionFunction{2, 1, 2}}) {
    for (const auto &g : enumerate_acyclic(omega)) REQUIRE(from_vector_matrix(to_reduced_matrix(g)) == g);
  }
  for_each_vector_matrix(DimensionFunction{1, 2}, [](const VectorMatrix &a) {
    if (is_in_M_omega(a)) {
      REQUIRE(to_reduced_matrix(from_vector_matrix(a)) == a);
    } else {
      REQUIRE_THROWS_AS(from_vector_matrix(a), std::invalid_argument);
    }
  });
  VectorMatrix diag({1, 3});
  diag.set(0, 0, Gf2Vector::ones(1));
  diag.set(1, 1, Gf2Vector::ones(3));
  CHECK(from_vector_matrix(diag) == VWDigraph({1, 3}));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_acyclic({1}).size() == 1);
  CHECK(enumerate_acyclic({1, 1, 1}).size() == 25);
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      const auto listed = enumerate_acyclic({a, b});
      CHECK(listed.size() == (std::size_t{1} << a) + (std::size_t{1} << b) - 1);
    }
  }
  std::size_t scanned = 0;
  for_each_vector_matrix(DimensionFunction{2, 3}, [&](const VectorMatrix &a) { scanned += is_in_M_omega(a); });
  CHECK(scanned == enumerate_acyclic({2, 3}).size());

  const auto listed = enumerate_acyclic({2, 1, 2});
  for (std::size_t i = 1; i < listed.size(); ++i) {
    REQUIRE(listed[i - 1].matrix().serialize() < listed[i].matrix().serialize());
  }
  for (const auto &g : listed) REQUIRE(is_acyclic(g));

  std::size_t visited = 0;
  for_each_acyclic({2, 2, 2}, [&](const VWDigraph &) { return ++visited < 10; });
  CHECK(visited == 10);

  CHECK_THROWS_AS(enumerate_acyclic({3, 3, 3}, EnumerationBudget{1000}), BudgetExceeded);
  try {
    enumerate_acyclic({9, 9, 9, 9});
  } catch (const BudgetExceeded &e) {
    CHECK(e.estimate() == doctest::Approx(enumeration_bound({9, 9, 9, 9})));
  }
}

TEST_CASE("weighted DAG count") {
  CHECK(count_M_omega({1, 1, 1}) == 25);
  CHECK(count_M_omega({2, 3}) == 11);
  for (const auto &omega : shapes_up_to(3, 2)) REQUIRE(count_M_omega(omega) == enumerate_acyclic(omega).size());
  CHECK(count_M_omega({1, 1, 1, 1, 1, 1}) == 3781503);
  CHECK_THROWS(count_M_omega({1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("vanishing sums") {
  CHECK(fixed_point_free_sum(Gf2Matrix::identity(3)) == 0);
  CHECK(fixed_point_free_sum(Gf2Matrix::from_rows({{1, 1}, {1, 1}})) == 1);
  CHECK(cycle_sum(Gf2Matrix::identity(4), 0b0001, 2) == 0);
  CHECK(cycle_sum(Gf2Matrix::from_rows({{1, 0, 0}, {0, 1, 1}, {0, 1, 1}}), 0b001, 1) == 1);
  CHECK_THROWS(cycle_sum(Gf2Matrix::identity(3), 0b010, 1));
  CHECK_THROWS(cycle_sum(Gf2Matrix::identity(3), 0b011, 2));

  // M(3): the single excluded vertex leaves v_23 v_32.
  for_each_dag(3, [](const SmallDigraph &d) {
    const auto v = dag_matrix(d);
    REQUIRE(all_principal_minors_one(v));
    REQUIRE(fixed_point_free_sum(v) == 0);
    REQUIRE(cycle_sum(v, 0b001, 1) == (v.get(1, 2) & v.get(2, 1)));
  });

  // M(4) found by scanning all unit-diagonal matrices equals the DAG matrices.
  std::set<std::vector<std::uint64_t>> scanned, from_dags;
  for (std::uint64_t code = 0; code < (1U << 12); ++code) {
    Gf2Matrix v = Gf2Matrix::identity(4);
    for (std::size_t i = 0, bit = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (i != j) v.set(i, j, (code >> bit++) & 1U);
      }
    }
    if (all_principal_minors_one(v)) scanned.insert({v.row(0), v.row(1), v.row(2), v.row(3)});
  }
  for_each_dag(4, [&](const SmallDigraph &d) {
    const auto v = dag_matrix(d);
    from_dags.insert({v.row(0), v.row(1), v.row(2), v.row(3)});
  });
  CHECK(scanned.size() == 543);
  CHECK(scanned == from_dags);
}

}
