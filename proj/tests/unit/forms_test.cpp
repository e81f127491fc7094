#include <random>

#include "doctest.h"
#include "glform/errors.hpp"
#include "glform/forms.hpp"
#include "oracles.hpp"

using namespace glform;

namespace {

const SymIntMatrix kG{{3, -1, 0}, {-1, 4, -1}, {0, -1, 2}};

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("inertia of the 7_6 Goeritz matrix and Seifert form") {
  CHECK(inertia(kG) == Inertia{3, 0, 0});
  const SymIntMatrix s{{-2, -1, 0, 0}, {-1, -2, 1, 0}, {0, 1, 2, -1}, {0, 0, -1, -2}};
  CHECK(inertia(s) == Inertia{1, 3, 0});
  CHECK(inertia(s) == oracle::inertia_by_charpoly(s));
}

TEST_CASE("inertia handles zero diagonals and empty matrices") {
  CHECK(inertia(SymIntMatrix{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
  CHECK(inertia(SymIntMatrix{}) == Inertia{0, 0, 0});
  CHECK(inertia(SymIntMatrix{{0, 0}, {0, 0}}) == Inertia{0, 0, 2});
  CHECK(inertia(SymIntMatrix{{0, 2, 1}, {2, 0, 3}, {1, 3, 0}}) ==
        oracle::inertia_by_charpoly(SymIntMatrix{{0, 2, 1}, {2, 0, 3}, {1, 3, 0}}));
  CHECK(inertia(SymIntMatrix{{1, 1}, {1, 1}}) == Inertia{1, 0, 1});
}

TEST_CASE("determinant against cofactor expansion") {
  CHECK(determinant(kG) == 19);
  CHECK(oracle::cofactor_det(kG.matrix()) == 19);
  CHECK(determinant(SymIntMatrix(IntMatrix::identity(3))) == 1);
  CHECK(determinant(SymIntMatrix{{-7, 8}, {8, -7}}) == -15);
  CHECK(determinant(SymIntMatrix{}) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("smith invariants against determinantal divisors") {
  CHECK(smith_invariants(kG) == big({1, 1, 19}));
  CHECK(oracle::smith_by_minors(kG.matrix()) == big({1, 1, 19}));
  CHECK(smith_invariants(IntMatrix::identity(4)) == big({1, 1, 1, 1}));
  CHECK(smith_invariants(IntMatrix{{0, 2}, {2, 0}}) == big({2, 2}));
  CHECK(smith_invariants(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == big({2, 6, 12}));
  CHECK(smith_invariants(IntMatrix{{1, 2}, {2, 4}, {3, 6}}) == big({1, 0}));
}

TEST_CASE("random matrices agree with the oracles") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 5;
    const SymIntMatrix m = oracle::random_symmetric(n, rng, t % 3 == 0 ? 1 : 4);
    CAPTURE(to_string(m));
    CHECK(inertia(m) == oracle::inertia_by_charpoly(m));
    CHECK(determinant(m) == oracle::cofactor_det(m.matrix()));
    if (n <= 4) CHECK(smith_invariants(m) == oracle::smith_by_minors(m.matrix()));
  }
}

TEST_CASE("property: invariance under unimodular congruence") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 6;
    const SymIntMatrix m = oracle::random_symmetric(n, rng);
    const Inertia in = inertia(m);
    const BigInt det = determinant(m);
    const auto smith = smith_invariants(m);
    for (int k = 0; k < 100; ++k) {
      const IntMatrix u = oracle::random_unimodular(n, rng);
      CHECK(abs(determinant(u)) == 1);
      const SymIntMatrix c = m.congruent(u);
      CHECK(inertia(c) == in);
      CHECK(determinant(c) == det);
      CHECK(smith_invariants(c) == smith);
    }
  }
}

TEST_CASE("property: |det| is the product of the Smith invariants") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const SymIntMatrix m = oracle::random_symmetric(1 + t % 6, rng);
    const BigInt det = abs(determinant(m));
    if (det == 0) continue;
    BigInt prod = 1;
    for (const auto& d : smith_invariants(m)) prod *= d;
    CHECK(prod == det);
  }
}

TEST_CASE("property: inertia is additive over direct sums") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const SymIntMatrix a = oracle::random_symmetric(t % 4, rng);
    const SymIntMatrix b = oracle::random_symmetric(1 + t % 3, rng);
    CHECK(inertia(a.direct_sum(b)) == inertia(a) + inertia(b));
  }
}

TEST_CASE("matrix construction and parsing") {
  CHECK(SymIntMatrix(parse_matrix("[[3,-1,0],[-1,4,-1],[0,-1,2]]")) == kG);
  CHECK(parse_matrix(to_string(kG.matrix())) == kG.matrix());
  CHECK(parse_matrix("[]").rows() == 0);
  CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]"), BadMatrix);
  CHECK_THROWS_AS(parse_matrix("[[1,2"), BadMatrix);
  CHECK_THROWS_AS(SymIntMatrix(IntMatrix{{1, 2}, {3, 4}}), BadMatrix);
  CHECK(kG.without(1) == SymIntMatrix{{3, 0}, {0, 2}});
}

TEST_CASE("multiplication overflow is reported") {
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(multiply(IntMatrix{{big, big}}, IntMatrix{{2}, {2}}), TooLarge);
  CHECK(multiply(IntMatrix{{1, 2}}, IntMatrix{{3}, {4}}) == IntMatrix{{11}});
}
