#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qstripe/generators.hpp"
#include "qstripe/matclass.hpp"
#include "qstripe/solvers.hpp"

using namespace qstripe;

namespace {

OrderedTree star_tree(int leaves) {
  OrderedTree t;
  const int total = leaves + 1;
  t.parent.assign(static_cast<std::size_t>(total), 0);
  t.parent[0] = -1;
  t.edge_length.assign(static_cast<std::size_t>(total), 1);
  t.edge_length[0] = 0;
  t.children.resize(static_cast<std::size_t>(total));
  for (int i = 1; i < total; ++i) t.children[0].push_back(i);
  return t;
}

}  // namespace

TEST_CASE("separating family matrix") {
  SUBCASE("D_{8,1} band structure") {
    const DistanceMatrix d = gen_example_matrix(8, 1);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        const int gap = std::abs(i - j);
        CHECK(d.at(i, j) == ((gap >= 3 && gap <= 5) ? 1 : 0));
      }
  }
  SUBCASE("separation holds across the full small range") {
    for (int q = 1; q <= 2; ++q)
      for (int n = 2 * q + 4; n <= 12; ++n) {
        const DistanceMatrix d = gen_example_matrix(n, q);
        CHECK(is_q_kalmanson(d, q + 1).verdict);
        CHECK_FALSE(is_q_kalmanson(d, q).verdict);
      }
  }
  SUBCASE("parameter range is enforced") {
    CHECK_THROWS_AS(gen_example_matrix(7, 2), InputError);
    CHECK_THROWS_AS(gen_example_matrix(8, 0), InputError);
  }
}

TEST_CASE("convex polygon matrix") {
  SUBCASE("unit square at scale 1000 is Kalmanson") {
    const DistanceMatrix m = gen_convex_polygon_matrix(
        {{0, 1000}, {1000, 1000}, {1000, 0}, {0, 0}}, 1000);
    CHECK(is_kalmanson(m).verdict);
    CHECK(m.at(0, 1) == 1000 * 1000);
  }
  SUBCASE("collinear points are rejected") {
    CHECK_THROWS_AS(gen_convex_polygon_matrix({{0, 0}, {1, 0}, {2, 0}, {1, -1}}, 100), InputError);
  }
  SUBCASE("counter-clockwise order is rejected") {
    CHECK_THROWS_AS(gen_convex_polygon_matrix({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 100), InputError);
  }
}

TEST_CASE("tree metric matrix") {
  SUBCASE("unit star gives the constant-2 matrix") {
    const DistanceMatrix m = gen_tree_metric_matrix(star_tree(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(m.at(i, j) == (i == j ? 0 : 2));
  }
  SUBCASE("random caterpillars are Kalmanson") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 8; ++trial) {
      CHECK(is_kalmanson(gen_tree_metric_matrix(gen_random_ordered_tree(7, 9, rng))).verdict);
    }
  }
  SUBCASE("four-point condition: the two largest pair sums coincide") {
    SplitMix64 rng(22);
    const DistanceMatrix m = gen_tree_metric_matrix(gen_random_ordered_tree(8, 9, rng));
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int k = j + 1; k < 8; ++k)
          for (int l = k + 1; l < 8; ++l) {
            std::array<Cost, 3> sums = {m.at(i, j) + m.at(k, l), m.at(i, k) + m.at(j, l),
                                        m.at(i, l) + m.at(j, k)};
            std::sort(sums.begin(), sums.end());
            CHECK(sums[1] == sums[2]);
          }
  }
  SUBCASE("tiny trees are rejected") {
    CHECK_THROWS_AS(gen_tree_metric_matrix(star_tree(2)), InputError);
  }
  SUBCASE("malformed trees are rejected") {
    OrderedTree broken = star_tree(4);
    broken.parent[2] = 3;  // children list no longer matches
    CHECK_THROWS_AS(gen_tree_metric_matrix(broken), InputError);
  }
}

TEST_CASE("random q-Kalmanson generator") {
  SUBCASE("outputs pass their recognizer") {
    for (int trial = 0; trial < 6; ++trial) {
      const DistanceMatrix m = gen_random_q_kalmanson(8, 2, 1000 + trial);
      CHECK(is_q_kalmanson(m, 2).verdict);
    }
  }
  SUBCASE("identity is optimal at the generated stripe width") {
    const DistanceMatrix m = gen_random_q_kalmanson(7, 2, 7);
    const QStripeInstance inst(m, 2);
    CHECK(qstripe_cost(Tour::identity(7), inst) == brute_force_qstripe(inst).cost);
  }
  SUBCASE("seed reproducibility") {
    CHECK(gen_random_q_kalmanson(8, 2, 99) == gen_random_q_kalmanson(8, 2, 99));
    CHECK_FALSE(gen_random_q_kalmanson(8, 2, 99) == gen_random_q_kalmanson(8, 2, 100));
  }
}

TEST_CASE("random Monge generator") {
  SUBCASE("outputs pass the recognizer") {
    for (int trial = 0; trial < 6; ++trial) {
      CHECK(is_monge(gen_symmetric_monge(7, 2000 + trial)).verdict);
    }
  }
  SUBCASE("Supnick tour is optimal for q in 1..3") {
    const DistanceMatrix m = gen_symmetric_monge(8, 17);
    for (int q = 1; q <= 3; ++q) {
      const QStripeInstance inst(m, q);
      CHECK(qstripe_cost(supnick_permutation(8), inst) == brute_force_qstripe(inst).cost);
    }
  }
  SUBCASE("seed reproducibility") {
    CHECK(gen_symmetric_monge(7, 5) == gen_symmetric_monge(7, 5));
  }
}
