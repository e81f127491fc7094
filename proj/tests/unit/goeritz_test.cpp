#include <numeric>

#include "corpus.hpp"
#include "doctest.h"
#include "glform/errors.hpp"
#include "glform/goeritz.hpp"
#include "glform/seifert.hpp"
#include "oracles.hpp"

using namespace glform;

namespace {

const char* k76 = "X(1,13,2,12) X(3,9,4,8) X(5,1,6,14) X(7,10,8,11) X(9,3,10,2) X(11,6,12,7) X(13,5,14,4)";

// Whether some simultaneous permutation of `m` equals `target`.
bool permutation_equal(const SymIntMatrix& m, const SymIntMatrix& target) {
  if (m.size() != target.size()) return false;
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i)
      for (std::size_t j = 0; j < p.size() && ok; ++j) ok = m(p[i], p[j]) == target(i, j);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("7_6 reproduces the known Goeritz matrix") {
  const KnotDiagram d = parse_pd(k76);
  const auto [c, dual] = checkerboard(d);
  const Coloring& col = c.white_regions.size() == 4 ? c : dual;
  const SymIntMatrix expected{{3, -1, 0}, {-1, 4, -1}, {0, -1, 2}};
  bool found = false;
  for (std::size_t k = 0; k < 4; ++k) {
    const GoeritzData g = goeritz(d, col, k);
    CHECK(g.mu == 5);
    CHECK(inertia(g.reduced) == Inertia{3, 0, 0});
    CHECK(abs(determinant(g.reduced)) == 19);
    CHECK(smith_invariants(g.reduced) == std::vector<BigInt>{1, 1, 19});
    found = found || permutation_equal(g.reduced, expected);
  }
  CHECK(found);
  CHECK(gl_signature(d) == -2);
  CHECK(knot_determinant(d) == 19);
}

TEST_CASE("goeritz edge cases") {
  const KnotDiagram u = KnotDiagram::unknot();
  const auto [c, dual] = checkerboard(u);
  const GoeritzData g = goeritz(u, c);
  CHECK(g.reduced.size() == 0);
  CHECK(g.mu == 0);
  CHECK(gl_signature(u) == 0);
  CHECK(knot_determinant(u) == 1);
  CHECK_THROWS_AS(goeritz(u, c, 1), BadRegion);
  const KnotDiagram t = parse_pd(k76);
  CHECK_THROWS_AS(goeritz(t, checkerboard(t).first, 9), BadRegion);
}

TEST_CASE("torus knots T(m,2)") {
  for (int m = 3; m <= 21; m += 2) {
    const KnotDiagram d = braid_to_diagram(std::vector<int>(m, 1), 2);
    CHECK(gl_signature(d) == -m + 1);
    CHECK(knot_determinant(d) == m);
    CHECK(alternating_signature(d) == -m + 1);
  }
}

TEST_CASE("T(3,2) determinant matches the Seifert side") {
  const std::vector<int> w{1, 1, 1};
  const SymIntMatrix s = symmetrized(seifert_matrix_from_braid(w, 2));
  CHECK(knot_determinant(braid_to_diagram(w, 2)) == abs(oracle::cofactor_det(s.matrix())));
}

TEST_CASE("alternating formula needs a reduced alternating diagram") {
  CHECK_THROWS_AS(alternating_signature(braid_to_diagram(std::vector<int>{1}, 2)), NotAlternating);
  const KnotDiagram t = braid_to_diagram(std::vector<int>{1, 1, 1}, 2);
  CHECK_THROWS_AS(alternating_signature(switch_crossing(connected_sum(t, t), 4)), NotAlternating);
  CHECK(alternating_signature(KnotDiagram::unknot()) == 0);
}

TEST_CASE("corpus: rows sum to zero and every reduction is equivalent") {
  for (const auto& k : corpus()) {
    CAPTURE(k.name);
    const KnotDiagram d = parse_pd(k.pd);
    for (const auto& col : {checkerboard(d).first, checkerboard(d).second}) {
      const GoeritzData g0 = goeritz(d, col);
      for (std::size_t i = 0; i < g0.full.size(); ++i) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < g0.full.size(); ++j) sum += g0.full(i, j);
        CHECK(sum == 0);
      }
      const Inertia in = inertia(g0.reduced);
      const auto smith = smith_invariants(g0.reduced);
      const BigInt det = abs(determinant(g0.reduced));
      for (std::size_t del = 1; del < col.white_regions.size(); ++del) {
        const GoeritzData g = goeritz(d, col, del);
        CHECK(inertia(g.reduced) == in);
        CHECK(abs(determinant(g.reduced)) == det);
        CHECK(smith_invariants(g.reduced) == smith);
      }
      CHECK(det == k.determinant);
    }
  }
}

TEST_CASE("corpus: signature under both colorings and diagram symmetries") {
  for (const auto& k : corpus()) {
    CAPTURE(k.name);
    const KnotDiagram d = parse_pd(k.pd);
    const auto [c, dual] = checkerboard(d);
    const std::int64_t s = coloring_signature(goeritz(d, c));
    CHECK(s == coloring_signature(goeritz(d, dual)));
    CHECK(s == k.signature);
    CHECK(gl_signature(mirror(d)) == -s);
    CHECK(gl_signature(reverse(d)) == s);
    if (is_alternating(d) && !has_nugatory_crossing(d)) {
      CHECK(alternating_signature(d) == s);
      // One coloring has every η equal.
      const auto cls = classify_crossings(d, c);
      CHECK(std::all_of(cls.eta.begin(), cls.eta.end(), [&](int e) { return e == cls.eta.front(); }));
    }
  }
}

TEST_CASE("mirror of the trefoil") {
  const KnotDiagram t = braid_to_diagram(std::vector<int>{1, 1, 1}, 2);
  CHECK(gl_signature(mirror(t)) == 2);
}
