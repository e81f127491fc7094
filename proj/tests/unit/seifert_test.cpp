#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "glform/errors.hpp"
#include "glform/goeritz.hpp"
#include "glform/seifert.hpp"
#include "oracles.hpp"

using namespace glform;

namespace {

IntMatrix skew(const IntMatrix& a) {
  IntMatrix k(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) k(i, j) = a(i, j) - a(j, i);
  return k;
}

// Majority count of q(x) = xᵀAx over F₂, one vector at a time.
int arf_oracle(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::size_t zeros = 0;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::int64_t q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((bits >> i & 1) && (bits >> j & 1)) q += a(i, j);
    if (q % 2 == 0) ++zeros;
  }
  return 2 * zeros > (std::size_t{1} << n) ? 0 : 1;
}

}  // namespace

TEST_CASE("trefoil Seifert matrix") {
  const SeifertMatrix s = seifert_matrix_from_braid(std::vector<int>{1, 1, 1}, 2);
  CHECK(s.a.rows() == 2);
  CHECK(s.betti == 2);
  CHECK(inertia(symmetrized(s)) == Inertia{0, 2, 0});
  CHECK(abs(determinant(symmetrized(s))) == 3);
  CHECK(arf(s) == 1);
  CHECK(arf_oracle(s.a) == 1);
}

TEST_CASE("small cases and errors") {
  const SeifertMatrix u = seifert_matrix_from_braid(std::vector<int>{1}, 2);
  CHECK(u.a.rows() == 0);
  CHECK(arf(u) == 0);
  CHECK(symmetrized_signature(u) == 0);
  CHECK_THROWS_AS(seifert_matrix_from_braid(std::vector<int>{1, 1}, 2), NotAKnot);
  CHECK_THROWS_AS(seifert_matrix_from_braid(std::vector<int>{1, 1, 1}, 3), DisconnectedSurface);
  CHECK_THROWS_AS(seifert_matrix_from_braid(std::vector<int>{2, 3, 2, 3, 1, 1}, 4), NotAKnot);
  CHECK_THROWS_AS(seifert_matrix_from_braid(std::vector<int>{1, 4}, 4), MalformedBraid);
  CHECK_THROWS_AS(arf(IntMatrix(31, 31)), TooLarge);
}

TEST_CASE("figure-eight Arf invariant") {
  CHECK(arf(seifert_matrix_from_braid(std::vector<int>{1, -2, 1, -2}, 3)) == 1);
}

TEST_CASE("a disc-band Seifert matrix of 7_6") {
  SeifertMatrix s;
  s.a = IntMatrix{{-1, 0, 0, 0}, {-1, -1, 0, 0}, {0, 1, 1, -1}, {0, 0, 0, -1}};
  CHECK(symmetrized_signature(s) == -2);
  CHECK(abs(determinant(symmetrized(s))) == 19);
  CHECK(determinant(skew(s.a)) == 1);
  CHECK(arf(s) == arf_oracle(s.a));
}

TEST_CASE("torus knots from their Seifert matrices") {
  for (int m = 3; m <= 21; m += 2) {
    const SeifertMatrix s = seifert_matrix_from_braid(std::vector<int>(m, 1), 2);
    CHECK(s.a.rows() == static_cast<std::size_t>(m - 1));
    CHECK(symmetrized_signature(s) == -m + 1);
  }
}

TEST_CASE("corpus: Seifert side agrees with the Goeritz side") {
  for (const auto& k : corpus()) {
    CAPTURE(k.name);
    const std::vector<int> w = parse_braid(k.braid);
    const SeifertMatrix s = seifert_matrix_from_braid(w);
    CHECK(s.betti % 2 == 0);
    CHECK(determinant(skew(s.a)) == 1);
    const KnotDiagram d = braid_to_diagram(w);
    CHECK(symmetrized_signature(s) == gl_signature(d));
    CHECK(abs(determinant(symmetrized(s))) == knot_determinant(d));
    CHECK(symmetrized_signature(s) == k.signature);
    CHECK(arf(s) == k.arf);
  }
}

TEST_CASE("property: Arf is a congruence invariant") {
  std::mt19937_64 rng(23);
  for (const auto& k : corpus()) {
    const SeifertMatrix s = seifert_matrix_from_braid(parse_braid(k.braid));
    if (s.a.rows() > 10 || s.a.rows() == 0) continue;
    for (int t = 0; t < 3; ++t) {
      const IntMatrix u = oracle::random_unimodular(s.a.rows(), rng);
      const IntMatrix b = multiply(multiply(u.transpose(), s.a), u);
      CHECK(arf(b) == k.arf);
      CHECK(arf_oracle(b) == k.arf);
    }
  }
}
