#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "glform/diagram.hpp"
#include "glform/forms.hpp"

namespace glform {

struct GoeritzData {
  /// Pre-Goeritz matrix over every white region; rows sum to zero.
  SymIntMatrix full;
  /// `full` with row and column `deleted_index` removed.
  SymIntMatrix reduced;
  std::size_t deleted_index = 0;
  /// Correction term: Σ η(C) over type II crossings.
  std::int64_t mu = 0;
  /// Face ids of the white regions, in matrix order.
  std::vector<std::size_t> white_regions;
};

/// Goeritz data of `d` for coloring `col`, deleting white region `deleted`
/// (an index into `col.white_regions`). Throws BadRegion when out of range.
GoeritzData goeritz(const KnotDiagram& d, const Coloring& col, std::size_t deleted = 0);

/// sign(G) − μ for one coloring.
std::int64_t coloring_signature(const GoeritzData& g);

/// Knot signature: sign(G) − μ for the canonical coloring. The dual coloring
/// is evaluated too and must agree.
std::int64_t gl_signature(const KnotDiagram& d);

/// |det(reduced Goeritz)|; 1 for the unknot.
BigInt knot_determinant(const KnotDiagram& d);

/// #black − #positive − 1 in the coloring where every η(C) is −1.
/// Requires a reduced alternating diagram; throws NotAlternating otherwise.
std::int64_t alternating_signature(const KnotDiagram& d);

}  // namespace glform
