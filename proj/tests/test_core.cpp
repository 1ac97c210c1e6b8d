#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qstripe/core.hpp"
#include "qstripe/generators.hpp"

using namespace qstripe;

namespace {

DistanceMatrix ones_off_diagonal(int n) {
  std::vector<Cost> e(static_cast<std::size_t>(n) * n, 1);
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 0;
  return DistanceMatrix(n, std::move(e));
}

// Unit square corners clockwise, squared Euclidean costs.
DistanceMatrix unit_square_squared() {
  return DistanceMatrix(4, {0, 1, 2, 1,
                            1, 0, 1, 2,
                            2, 1, 0, 1,
                            1, 2, 1, 0});
}

DistanceMatrix random_matrix(int n, SplitMix64& rng, Cost lo = 0, Cost hi = 20) {
  std::vector<Cost> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Cost d = lo + static_cast<Cost>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
      e[static_cast<std::size_t>(i) * n + j] = d;
      e[static_cast<std::size_t>(j) * n + i] = d;
    }
  return DistanceMatrix(n, std::move(e));
}

Tour random_tour(int n, SplitMix64& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
  }
  return Tour(std::move(order));
}

}  // namespace

TEST_CASE("distance matrix validates symmetry, diagonal, size") {
  CHECK_THROWS_AS(DistanceMatrix(2, {0, 1, 1, 0}), InputError);
  CHECK_THROWS_AS(DistanceMatrix(3, {0, 1, 2, 1, 0, 3, 2, 9, 0}), InputError);  // asymmetric
  CHECK_THROWS_AS(DistanceMatrix(3, {1, 1, 2, 1, 0, 3, 2, 3, 0}), InputError);  // diagonal
  CHECK_NOTHROW(DistanceMatrix(3, {0, 1, 2, 1, 0, 3, 2, 3, 0}));
}

TEST_CASE("overflow-prone matrices are rejected at construction") {
  const Cost huge = std::numeric_limits<Cost>::max() / 4;
  std::vector<Cost> e(9, huge);
  for (int i = 0; i < 3; ++i) e[static_cast<std::size_t>(i) * 3 + i] = 0;
  CHECK_THROWS_AS(DistanceMatrix(3, std::move(e)), InputError);
}

TEST_CASE("matrix text round trip and load errors") {
  std::stringstream good("3\n0 1 2\n1 0 3\n2 3 0\n");
  const DistanceMatrix m = DistanceMatrix::load(good);
  CHECK(m.at(1, 2) == 3);
  std::stringstream out;
  m.save(out);
  CHECK(DistanceMatrix::load(out) == m);

  std::stringstream bad("3\n0 1 2\n9 0 3\n2 3 0\n");
  CHECK_THROWS_WITH_AS(DistanceMatrix::load(bad), doctest::Contains("row 1, column 2"),
                       InputError);
  std::stringstream truncated("3\n0 1\n");
  CHECK_THROWS_AS(DistanceMatrix::load(truncated), InputError);
}

TEST_CASE("tsp cost") {
  SplitMix64 rng(11);
  CHECK(tsp_cost(random_tour(5, rng), ones_off_diagonal(5)) == 5);
  CHECK(tsp_cost(Tour::identity(4), unit_square_squared()) == 4);
  CHECK(tsp_cost(Tour::identity(8), gen_example_matrix(8, 1)) == 0);
  CHECK_THROWS_AS(tsp_cost(Tour::identity(5), unit_square_squared()), InputError);
}

TEST_CASE("qstripe cost") {
  SplitMix64 rng(12);
  SUBCASE("q=1 reduces to tsp cost") {
    for (int trial = 0; trial < 10; ++trial) {
      const DistanceMatrix m = random_matrix(7, rng);
      const Tour t = random_tour(7, rng);
      CHECK(qstripe_cost(t, QStripeInstance(m, 1)) == tsp_cost(t, m));
    }
  }
  SUBCASE("n=2q+1 sums every pairwise distance once, tour-independent") {
    const DistanceMatrix m = random_matrix(5, rng);
    Cost all_pairs = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) all_pairs += m.at(i, j);
    const QStripeInstance inst(m, 2);
    for (int trial = 0; trial < 20; ++trial) {
      CHECK(qstripe_cost(random_tour(5, rng), inst) == all_pairs);
    }
  }
  SUBCASE("all-ones n=6 q=2 costs 12") {
    const QStripeInstance inst(ones_off_diagonal(6), 2);
    CHECK(qstripe_cost(random_tour(6, rng), inst) == 12);
  }
  SUBCASE("stripe width is range checked") {
    CHECK_THROWS_AS(QStripeInstance(ones_off_diagonal(6), 3), InputError);
    CHECK_THROWS_AS(QStripeInstance(ones_off_diagonal(6), 0), InputError);
  }
}

TEST_CASE("bottleneck qstripe cost") {
  SplitMix64 rng(13);
  CHECK(bottleneck_qstripe_cost(random_tour(8, rng), QStripeInstance(ones_off_diagonal(8), 3)) == 1);
  const DistanceMatrix d81 = gen_example_matrix(8, 1);
  CHECK(bottleneck_qstripe_cost(Tour::identity(8), QStripeInstance(d81, 1)) == 0);
  CHECK(bottleneck_qstripe_cost(Tour::identity(8), QStripeInstance(d81, 3)) == 1);
}

TEST_CASE("qap cost") {
  SplitMix64 rng(14);
  const DistanceMatrix m = random_matrix(6, rng);
  SUBCASE("zero coupling gives zero") {
    const QapInstance inst(m, SquareMatrix(6, std::vector<Cost>(36, 0)));
    CHECK(qap_cost(random_tour(6, rng), inst) == 0);
  }
  SUBCASE("identity coupling touches only the zero diagonal") {
    std::vector<Cost> id(36, 0);
    for (int i = 0; i < 6; ++i) id[static_cast<std::size_t>(i) * 6 + i] = 1;
    const QapInstance inst(m, SquareMatrix(6, std::move(id)));
    CHECK(qap_cost(Tour::identity(6), inst) == 0);
  }
  SUBCASE("cycle-power coupling doubles the qstripe cost") {
    for (int q = 1; q <= 2; ++q) {
      const QStripeInstance inst(m, q);
      const QapInstance qap = qstripe_as_qap(inst);
      for (int trial = 0; trial < 10; ++trial) {
        const Tour t = random_tour(6, rng);
        CHECK(qap_cost(t, qap) == 2 * qstripe_cost(t, inst));
      }
    }
  }
}

TEST_CASE("qstripe_as_qap coupling structure") {
  SUBCASE("C_5^2 is complete") {
    const QapInstance qap = qstripe_as_qap(QStripeInstance(ones_off_diagonal(5), 2));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(qap.c.at(i, j) == (i == j ? 0 : 1));
  }
  SUBCASE("C_6^1 is the 6-cycle") {
    const QapInstance qap = qstripe_as_qap(QStripeInstance(ones_off_diagonal(6), 1));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        const int gap = std::abs(i - j);
        CHECK(qap.c.at(i, j) == ((gap == 1 || gap == 5) ? 1 : 0));
      }
  }
}

TEST_CASE("rotation and reflection invariance of the qstripe objective") {
  SplitMix64 rng(15);
  const DistanceMatrix m = random_matrix(8, rng);
  const QStripeInstance inst(m, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const Tour t = random_tour(8, rng);
    const Cost base = qstripe_cost(t, inst);
    CHECK(qstripe_cost(t.rotated(1 + static_cast<int>(rng.below(7))), inst) == base);
    CHECK(qstripe_cost(t.reversed(), inst) == base);
  }
}

TEST_CASE("entrywise increase never decreases the qstripe cost") {
  SplitMix64 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const DistanceMatrix m = random_matrix(7, rng);
    std::vector<Cost> bumped(static_cast<std::size_t>(49), 0);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (i != j) bumped[static_cast<std::size_t>(i) * 7 + j] = m.at(i, j);
    // bump one symmetric pair
    const int a = static_cast<int>(rng.below(7));
    const int b = (a + 1 + static_cast<int>(rng.below(6))) % 7;
    bumped[static_cast<std::size_t>(a) * 7 + b] += 5;
    bumped[static_cast<std::size_t>(b) * 7 + a] += 5;
    const DistanceMatrix m2(7, std::move(bumped));
    const Tour t = random_tour(7, rng);
    CHECK(qstripe_cost(t, QStripeInstance(m2, 2)) >= qstripe_cost(t, QStripeInstance(m, 2)));
  }
}

TEST_CASE("tour validation") {
  CHECK_THROWS_AS(Tour({0, 0, 1}), InputError);
  CHECK_THROWS_AS(Tour({0, 3, 1}), InputError);
  const Tour t({2, 0, 1});
  CHECK(t.at(3) == 2);  // cyclic indexing
}
