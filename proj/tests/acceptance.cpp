// Acceptance checks, one line per criterion.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "glform/diagram.hpp"
#include "glform/forms.hpp"
#include "glform/goeritz.hpp"
#include "glform/obstructions.hpp"
#include "glform/seifert.hpp"
#include "glform/surfaces.hpp"
#include "oracles.hpp"

using namespace glform;

namespace {

const char* k76 = "X(1,13,2,12) X(3,9,4,8) X(5,1,6,14) X(7,10,8,11) X(9,3,10,2) X(11,6,12,7) X(13,5,14,4)";

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    throw Failure{os.str()};
  }
}

std::ostream& operator<<(std::ostream& os, const Inertia& in) {
  return os << '(' << in.positive << ',' << in.negative << ',' << in.zero << ')';
}

std::string str(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

struct CorpusDiagram {
  std::string name;
  KnotDiagram d;
  std::optional<std::vector<int>> word;
  long signature;
};

std::vector<CorpusDiagram> all_diagrams() {
  std::vector<CorpusDiagram> out;
  for (const auto& k : corpus()) {
    out.push_back({k.name + " (pd)", parse_pd(k.pd), std::nullopt, k.signature});
    const auto w = parse_braid(k.braid);
    out.push_back({k.name + " (braid)", braid_to_diagram(w), w, k.signature});
  }
  for (int m = 3; m <= 21; m += 2) {
    std::vector<int> w(m, 1);
    out.push_back({"T(" + std::to_string(m) + ",2)", braid_to_diagram(w, 2), w, -m + 1});
  }
  out.push_back({"unknot", KnotDiagram::unknot(), std::nullopt, 0});
  return out;
}

void criterion1() {
  const KnotDiagram d = parse_pd(k76);
  expect_eq(d.crossing_count(), std::size_t{7}, "crossings");
  const auto [c, dual] = checkerboard(d);
  bool matched = false;
  for (const Coloring* col : {&c, &dual}) {
    const GoeritzData g = goeritz(d, *col);
    if (g.mu != 5) continue;
    matched = true;
    expect_eq(g.reduced.size(), std::size_t{3}, "reduced dimension");
    expect_eq(inertia(g.reduced), Inertia{3, 0, 0}, "inertia");
    expect_eq(oracle::inertia_by_charpoly(g.reduced), Inertia{3, 0, 0}, "inertia oracle");
    expect_eq(abs(oracle::cofactor_det(g.reduced.matrix())), BigInt(19), "|det| oracle");
    expect_eq(abs(determinant(g.reduced)), BigInt(19), "|det|");
    expect_eq(str(oracle::smith_by_minors(g.reduced.matrix())), std::string("(1,1,19)"), "smith oracle");
    expect_eq(str(smith_invariants(g.reduced)), std::string("(1,1,19)"), "smith");
    expect_eq(signature(g.reduced) - g.mu, std::int64_t{-2}, "sign(G) - mu");
  }
  expect(matched, "no coloring with mu = 5");
  expect_eq(gl_signature(d), std::int64_t{-2}, "gl_signature");
}

void criterion2() {
  for (int m = 3; m <= 21; m += 2) {
    const std::vector<int> w(m, 1);
    expect_eq(gl_signature(braid_to_diagram(w, 2)), std::int64_t{-m + 1}, "gl_signature T(" + std::to_string(m) + ",2)");
    expect_eq(symmetrized_signature(seifert_matrix_from_braid(w, 2)), std::int64_t{-m + 1},
              "Seifert signature T(" + std::to_string(m) + ",2)");
  }
}

void criterion3(const std::vector<CorpusDiagram>& diagrams) {
  for (const auto& cd : diagrams) {
    const auto [c, dual] = checkerboard(cd.d);
    for (const Coloring* col : {&c, &dual}) {
      for (std::size_t del = 0; del < col->white_regions.size(); ++del) {
        const GoeritzData g = goeritz(cd.d, *col, del);
        expect_eq(signature(g.reduced) - g.mu, std::int64_t{cd.signature}, cd.name + " sign(G)-mu");
      }
    }
    if (cd.word) {
      const auto s = seifert_matrix_from_braid(*cd.word, inferred_strands(*cd.word));
      expect_eq(symmetrized_signature(s), std::int64_t{cd.signature}, cd.name + " Seifert signature");
    }
  }
}

void criterion4(const std::vector<CorpusDiagram>& diagrams) {
  const BandSurface s = BandSurface::parse("bands: 3 4 2 ; cross(1,2): -1 ; cross(2,3): -1");
  expect(linking_matrix(s) == SymIntMatrix{{3, -1, 0}, {-1, 4, -1}, {0, -1, 2}}, "7_6 band linking matrix");
  for (const auto& cd : diagrams) {
    const auto [c, dual] = checkerboard(cd.d);
    for (const Coloring* col : {&c, &dual}) {
      const SymIntMatrix g = goeritz(cd.d, *col).reduced;
      const SymIntMatrix lk = linking_matrix(black_surface_bands(cd.d, *col));
      expect_eq(inertia(lk), inertia(g), cd.name + " inertia");
      expect_eq(abs(determinant(lk)), abs(determinant(g)), cd.name + " |det|");
      expect_eq(str(smith_invariants(lk)), str(smith_invariants(g)), cd.name + " smith");
    }
  }
}

void criterion5() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  std::uniform_int_distribution<std::int64_t> e(-5, 5), half(-8, 8);
  std::size_t moves = 0;
  for (int k = 0; k < 10; ++k) {
    const SurfaceState st{oracle::random_symmetric(dim(rng), rng, 5), 2 * half(rng)};
    const std::int64_t c = st.conserved();
    random_sstar_walk(st, 1000, 7000 + k, [&](std::size_t, const SurfaceState& s, std::int64_t v) {
      ++moves;
      expect_eq(v, c, "walk " + std::to_string(k) + " conserved");
      expect(s.euler % 2 == 0, "odd Euler number");
    });
  }
  expect_eq(moves, std::size_t{10000}, "move count");

  const KnotDiagram d = parse_pd(k76);
  const auto [c, dual] = checkerboard(d);
  const Coloring& col = goeritz(d, c).mu == 5 ? c : dual;
  const SurfaceState st{linking_matrix(black_surface_bands(d, col)), euler_checkerboard(d, col)};
  expect_eq(st.euler, std::int64_t{-10}, "7_6 Euler number");
  expect_eq(st.conserved(), std::int64_t{-2}, "7_6 conserved");
  const SurfaceState reference{SymIntMatrix{{3, -1, 0}, {-1, 4, -1}, {0, -1, 2}}, -10};
  for (const SurfaceState* s : {&st, &reference})
    random_sstar_walk(*s, 1000, 76, [&](std::size_t, const SurfaceState&, std::int64_t v) {
      expect_eq(v, std::int64_t{-2}, "7_6 walk");
    });
}

void criterion6(const std::vector<CorpusDiagram>& diagrams) {
  expect_eq(gordian_lower_bound(-8, 0), std::int64_t{4}, "u(T(9,2)) bound");
  expect_eq(sharp_gordian_lower_bound(-8, 0), std::int64_t{2}, "sharp u(T(9,2)) bound");
  expect_eq(gordian_lower_bound(gl_signature(braid_to_diagram(std::vector<int>(9, 1), 2)), 0), std::int64_t{4},
            "T(9,2) pipeline bound");
  const std::vector<int> fig8{1, -2, 1, -2};
  const std::int64_t sigma = gl_signature(braid_to_diagram(fig8, 3));
  const int a = arf(seifert_matrix_from_braid(fig8, 3));
  expect_eq(sigma, std::int64_t{0}, "sigma(4_1)");
  expect_eq(a, 1, "Arf(4_1)");
  expect(moebius_b4_test(sigma, a).verdict == Verdict::obstructed, "4_1 Moebius test not obstructed");
  std::size_t checked = 0;
  for (const auto& cd : diagrams) {
    if (!is_alternating(cd.d) || has_nugatory_crossing(cd.d)) continue;
    ++checked;
    expect_eq(alternating_signature(cd.d), gl_signature(cd.d), cd.name + " alternating formula");
  }
  expect(checked > 100, "too few alternating diagrams");
}

void criterion7(const std::vector<CorpusDiagram>& diagrams) {
  std::mt19937_64 rng(77);
  std::vector<SymIntMatrix> mats{SymIntMatrix{{3, -1, 0}, {-1, 4, -1}, {0, -1, 2}},
                                 SymIntMatrix{{-2, -1, 0, 0}, {-1, -2, 1, 0}, {0, 1, 2, -1}, {0, 0, -1, -2}},
                                 SymIntMatrix{{0, 1}, {1, 0}}};
  for (int k = 0; k < 12; ++k) mats.push_back(oracle::random_symmetric(1 + k % 6, rng));
  for (const auto& m : mats) {
    const Inertia in = inertia(m);
    expect_eq(in, oracle::inertia_by_charpoly(m), "inertia oracle");
    const BigInt det = determinant(m);
    const auto smith = str(smith_invariants(m));
    for (int t = 0; t < 100; ++t) {
      const SymIntMatrix c = m.congruent(oracle::random_unimodular(m.size(), rng));
      expect_eq(inertia(c), in, "congruence inertia");
      expect_eq(determinant(c), det, "congruence det");
      expect_eq(str(smith_invariants(c)), smith, "congruence smith");
    }
  }
  for (const auto& cd : diagrams) {
    const std::int64_t s = gl_signature(cd.d);
    expect_eq(gl_signature(mirror(cd.d)), -s, cd.name + " mirror");
    expect_eq(gl_signature(reverse(cd.d)), s, cd.name + " reverse");
  }

  auto sig2 = [](std::int64_t l, std::int64_t m, std::int64_t n) -> std::int64_t {
    const std::int64_t det = l * n - m * m, tr = l + n;
    if (det < 0) return 0;
    if (det == 0) return (tr > 0) - (tr < 0);
    return tr > 0 ? 2 : -2;
  };
  const auto found = crosscap2_candidates(-2, 15, 20, false);
  bool witness = false;
  std::size_t brute = 0;
  for (std::int64_t l = -20; l <= 20; ++l)
    for (std::int64_t m = -20; m <= 20; ++m)
      for (std::int64_t n = l; n <= 20; ++n)
        if (l % 2 && n % 2 && m % 2 == 0 && std::llabs(l * n - m * m) == 15 && sig2(l, m, n) - (l + 2 * m + n) == -2)
          ++brute;
  for (const auto& f : found) {
    expect(f.l % 2 && f.n % 2 && f.m % 2 == 0, "parity");
    expect(std::llabs(f.l * f.n - f.m * f.m) == 15, "determinant");
    expect(sig2(f.l, f.m, f.n) - (f.l + 2 * f.m + f.n) == -2, "signature condition");
    expect(std::llabs(f.l) <= 20 && std::llabs(f.m) <= 20 && std::llabs(f.n) <= 20, "radius");
    witness = witness || f == BinaryForm{-7, 8, -7};
  }
  expect_eq(found.size(), brute, "candidate count");
  expect(witness, "(-7,8,-7) missing");
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const std::vector<CorpusDiagram> diagrams = all_diagrams();
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"7_6 end-to-end: inertia (3,0,0), mu 5, sigma -2, |det| 19, smith (1,1,19)", criterion1},
      {"torus family T(m,2), m = 3..21: sigma = -m+1 from Goeritz and Seifert", criterion2},
      {"sign(G)-mu independent of coloring and deleted region, equal to Seifert side", [&] { criterion3(diagrams); }},
      {"black-surface linking matrix matches reduced Goeritz; 7_6 bands give G exactly", [&] { criterion4(diagrams); }},
      {"S*-walks conserve sigma + e/2 (10^4 moves; 7_6 stays at -2)", criterion5},
      {"applications: u(T(9,2)) >= 4, u#(T(9,2)) >= 2, 4_1 Moebius obstruction, alternating formula",
       [&] { criterion6(diagrams); }},
      {"properties: congruence invariance, mirror, reversal, crosscap witnesses", [&] { criterion7(diagrams); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << ms
              << " ms]";
    if (!ok) std::cout << " -- " << detail;
    std::cout << '\n';
    if (!ok) ++failed;
  }
  const double total = std::chrono::duration<double>(clock::now() - start).count();
  std::cout << (total < 60 ? "PASS" : "FAIL") << " runtime " << total << " s (limit 60 s)\n";
  return failed == 0 && total < 60 ? 0 : 1;
}
