#include "glform/goeritz.hpp"

#include <algorithm>

#include "glform/errors.hpp"

namespace glform {

GoeritzData goeritz(const KnotDiagram& d, const Coloring& col, std::size_t deleted) {
  const std::size_t w = col.white_regions.size();
  if (deleted >= w)
    throw BadRegion("white region " + std::to_string(deleted) + " out of range (" + std::to_string(w) + " regions)");

  std::vector<std::size_t> index_of(col.faces.size(), w);
  for (std::size_t k = 0; k < w; ++k) index_of[col.white_regions[k]] = k;

  const CrossingClass cls = classify_crossings(d, col);
  GoeritzData g;
  g.full = SymIntMatrix(w);
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const int first = col.corner(c, 0) == Shade::white ? 0 : 1;
    const std::size_t i = index_of[col.faces.around[c][first]];
    const std::size_t j = index_of[col.faces.around[c][first + 2]];
    if (i == w || j == w) throw InternalInvariantViolation("white corner maps to a black face");
    if (i == j) continue;
    g.full.add(i, j, -cls.eta[c]);
  }
  for (std::size_t i = 0; i < w; ++i) {
    std::int64_t off = 0;
    for (std::size_t k = 0; k < w; ++k)
      if (k != i) off += g.full(i, k);
    g.full.set(i, i, -off);
  }

  g.reduced = g.full.without(deleted);
  g.deleted_index = deleted;
  g.mu = correction_term(cls);
  g.white_regions = col.white_regions;
  return g;
}

std::int64_t coloring_signature(const GoeritzData& g) { return signature(g.reduced) - g.mu; }

std::int64_t gl_signature(const KnotDiagram& d) {
  const auto [canonical, dual] = checkerboard(d);
  const std::int64_t s = coloring_signature(goeritz(d, canonical));
  const std::int64_t t = coloring_signature(goeritz(d, dual));
  if (s != t)
    throw InternalInvariantViolation("colorings disagree on the signature: " + std::to_string(s) + " vs " +
                                     std::to_string(t));
  return s;
}

BigInt knot_determinant(const KnotDiagram& d) {
  const auto [canonical, dual] = checkerboard(d);
  return abs(determinant(goeritz(d, canonical).reduced));
}

std::int64_t alternating_signature(const KnotDiagram& d) {
  if (!is_alternating(d)) throw NotAlternating("diagram is not alternating");
  if (has_nugatory_crossing(d)) throw NotAlternating("alternating formula needs a reduced diagram");
  if (d.empty()) return 0;

  auto [canonical, dual] = checkerboard(d);
  const CrossingClass cls = classify_crossings(d, canonical);
  const bool uniform = std::all_of(cls.eta.begin(), cls.eta.end(), [&](int e) { return e == cls.eta.front(); });
  if (!uniform) throw InternalInvariantViolation("reduced alternating diagram with mixed incidence numbers");
  const Coloring& col = cls.eta.front() == -1 ? canonical : dual;

  const auto black = static_cast<std::int64_t>(col.black_regions.size());
  std::int64_t positive = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    if (d.sign(c) > 0) ++positive;
  return black - positive - 1;
}

}  // namespace glform
