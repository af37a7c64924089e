#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gersh/oracle.hpp"
#include "gersh/structured.hpp"
#include "support/generators.hpp"

using namespace gersh;
using testsupport::ones_matrix;
using testsupport::random_real_matrix;
using testsupport::random_symmetric_matrix;
using testsupport::uniform;

TEST_CASE("symmetry defect") {
  SECTION("symmetric matrices have defect zero") {
    std::mt19937_64 rng(111);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_symmetric_matrix(rng, 3 + rng() % 5, 2.0);
      CHECK(symmetry_defect(a).value == 0.0);
    }
  }
  SECTION("doubly stochastic matrices have defect zero") {
    const auto a = DenseMatrix::from_real(
        {{0.5, 0.3, 0.2}, {0.2, 0.5, 0.3}, {0.3, 0.2, 0.5}});
    CHECK(symmetry_defect(a).value == 0.0);
  }
  SECTION("upper-triangular epsilon example") {
    const double eps = 0.25;
    const auto a = DenseMatrix::from_real({{1.0, eps}, {0.0, 1.0 + eps}});
    const auto d = symmetry_defect(a);
    CHECK(d.value == eps);
  }
  SECTION("complex input rejected") {
    DenseMatrix c(2, 2);
    c.set(0, 1, Complex{0.0, 1.0});
    CHECK_THROWS_AS(symmetry_defect(c), precondition_error);
  }
}

TEST_CASE("normal pair disks") {
  SECTION("diagonal matrix, pair (1,2)") {
    const auto a = DenseMatrix::from_real({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    const auto rep = normal_pair_disks(a, Complex{1, 0}, Complex{2, 0});
    const double rho = std::sqrt(3.0);
    CHECK(rep.disks.disk(0).radius == Catch::Approx(rho).epsilon(1e-14));
    REQUIRE(rep.witness_row.has_value());
    CHECK(*rep.witness_row == 0);
  }
  SECTION("block symmetric with spectrum {1,3,5}") {
    const auto a = DenseMatrix::from_real({{2, 1, 0}, {1, 2, 0}, {0, 0, 5}});
    const auto sol = oracle::eigenvalues(a);
    REQUIRE(std::abs(sol.eigenvalues[0] - Complex{1, 0}) < 1e-10);
    REQUIRE(std::abs(sol.eigenvalues[1] - Complex{3, 0}) < 1e-10);
    const auto rep = normal_pair_disks(a, sol.eigenvalues[0], sol.eigenvalues[1]);
    // row 0: r = 1, rho = 1 + 2*sqrt(3); both 1 and 3 are within 1 of center 2
    CHECK(rep.disks.disk(0).radius == Catch::Approx(1.0 + 2.0 * std::sqrt(3.0)).margin(1e-10));
    REQUIRE(rep.witness_row.has_value());
    CHECK(*rep.witness_row == 0);
  }
  SECTION("J3 pair (0,3)") {
    const auto rep = normal_pair_disks(ones_matrix(3), Complex{}, Complex{3, 0});
    CHECK(rep.disks.disk(0).radius == Catch::Approx(1.0 + 3.0 * std::sqrt(3.0)).margin(1e-12));
    REQUIRE(rep.witness_row.has_value());
  }
  SECTION("preconditions") {
    const auto nonnormal = DenseMatrix::from_real({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK_THROWS_AS(normal_pair_disks(nonnormal, Complex{}, Complex{1, 0}), precondition_error);
    const auto a = DenseMatrix::from_real({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    CHECK_THROWS_AS(normal_pair_disks(a, Complex{1, 0}, Complex{1, 0}), precondition_error);
    const auto small = DenseMatrix::from_real({{1, 0}, {0, 2}});
    CHECK_THROWS_AS(normal_pair_disks(small, Complex{1, 0}, Complex{2, 0}), precondition_error);
  }
}

TEST_CASE("almost-symmetric pair disks") {
  SECTION("symmetric input reduces to the normal radii") {
    std::mt19937_64 rng(222);
    const auto a = random_symmetric_matrix(rng, 4, 2.0);
    const auto sol = oracle::eigenvalues(a);
    const Complex l = sol.eigenvalues[0], m = sol.eigenvalues[1];
    const auto almost = almost_symmetric_pair_disks(a, l, m);
    const auto normal = normal_pair_disks(a, l, m);
    REQUIRE(almost.delta.has_value());
    CHECK(*almost.delta == 0.0);
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(almost.disks.disk(i).radius == normal.disks.disk(i).radius);
  }
  SECTION("monotonicity: almost-symmetric radii dominate normal ones") {
    std::mt19937_64 rng(223);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_symmetric_matrix(rng, 3 + rng() % 4, 2.0);
      const auto sol = oracle::eigenvalues(a);
      const Complex l = sol.eigenvalues[0], m = sol.eigenvalues.back();
      if (l == m) continue;
      const auto almost = almost_symmetric_pair_disks(a, l, m);
      const auto normal = normal_pair_disks(a, l, m);
      for (std::size_t i = 0; i < a.rows(); ++i)
        CHECK(almost.disks.disk(i).radius >= normal.disks.disk(i).radius);
    }
  }
  SECTION("random pair containment, complex eigenvalues included") {
    std::mt19937_64 rng(224);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 3 + rng() % 6;
      const auto a = random_real_matrix(rng, n, 2.0);
      const auto sol = oracle::eigenvalues(a);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || sol.eigenvalues[i] == sol.eigenvalues[j]) continue;
          const auto rep =
              almost_symmetric_pair_disks(a, sol.eigenvalues[i], sol.eigenvalues[j], 1e-8);
          REQUIRE(rep.witness_row.has_value());
        }
    }
  }
}

TEST_CASE("pair containment over random symmetric matrices") {
  std::mt19937_64 rng(225);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const auto a = random_symmetric_matrix(rng, n, 2.0);
    const auto sol = oracle::eigenvalues(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || sol.eigenvalues[i] == sol.eigenvalues[j]) continue;
        const auto rep = normal_pair_disks(a, sol.eigenvalues[i], sol.eigenvalues[j], 1e-8);
        REQUIRE(rep.witness_row.has_value());
      }
  }
}

TEST_CASE("zero-sum weight vectors") {
  SECTION("validation rejects bad vectors") {
    // all non-pivot weights zero: the sum is 1, not 0
    ZeroSumWeightVector bad{{Complex{1, 0}, Complex{}, Complex{}}, 0};
    CHECK_THROWS_AS(lemma52_bound(ones_matrix(3), 0, bad), precondition_error);
    // pivot not 1
    ZeroSumWeightVector bad2{{Complex{0.5, 0}, Complex{-0.5, 0}, Complex{}}, 0};
    CHECK_THROWS_AS(lemma52_bound(ones_matrix(3), 0, bad2), precondition_error);
    // pivot mismatch with the row index
    ZeroSumWeightVector ok{{Complex{1, 0}, Complex{-1, 0}, Complex{}}, 0};
    CHECK_THROWS_AS(lemma52_bound(ones_matrix(3), 1, ok), precondition_error);
  }
  SECTION("explicit (1,-1,0) vector") {
    const auto a = DenseMatrix::from_real({{3, -2, 5}, {1, 4, 1}, {0, 2, 9}});
    ZeroSumWeightVector t{{Complex{1, 0}, Complex{-1, 0}, Complex{}}, 0};
    const auto [s, r] = lemma52_bound(a, 0, t);
    CHECK(s == 2.0);  // |a_{0,1}|
    CHECK(s <= r + 1e-9);
  }
  SECTION("generator produces admissible vectors; J_n is tight") {
    std::mt19937_64 rng(226);
    for (std::size_t n : {3u, 5u, 8u}) {
      const auto jn = ones_matrix(n);
      for (int trial = 0; trial < 100; ++trial) {
        const std::size_t pivot = rng() % n;
        const auto t = random_zero_sum_weights(n, pivot, rng);
        const auto [s, r] = lemma52_bound(jn, pivot, t);
        CHECK(r == 1.0);
        CHECK(s == Catch::Approx(1.0).margin(1e-12));  // zero sum forces S = -1
      }
    }
  }
  SECTION("lemma 5.2 inequality over random matrices") {
    std::mt19937_64 rng(227);
    int checks = 0;
    for (int mat = 0; mat < 50; ++mat) {
      const std::size_t n = 3 + rng() % 6;
      const auto a = random_real_matrix(rng, n, 3.0);
      for (int trial = 0; trial < 200; ++trial) {
        const std::size_t pivot = rng() % n;
        const auto t = random_zero_sum_weights(n, pivot, rng);
        const auto [s, r] = lemma52_bound(a, pivot, t);
        REQUIRE(s <= r + 1e-9);
        ++checks;
      }
    }
    CHECK(checks == 10000);
  }
}
