#pragma once

// Spanning surfaces in band form, and the S*-move calculus on
// (Gordon–Litherland matrix, Euler number) pairs.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glform/diagram.hpp"
#include "glform/forms.hpp"

namespace glform {

struct Band {
  /// Signed half-twists; right-handed is positive. A curl counts as two.
  std::int64_t half_twists = 0;
  friend bool operator==(const Band&, const Band&) = default;
};

/// One 0-handle with bands attached. `crossings` is keyed by band pairs (i, j)
/// with i <= j, 0-based; (i, i) holds self-crossings of band i.
struct BandSurface {
  std::vector<Band> bands;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<int>> crossings;

  /// Appends signed crossings between bands i and j (order-insensitive).
  void add_crossings(std::size_t i, std::size_t j, const std::vector<int>& signs);

  /// `bands: 3 4 2 ; cross(1,2): -1 ; cross(2,3): -1`, band numbers 1-based.
  /// Clauses are separated by `;` or newlines. Throws BadMatrix on bad text.
  static BandSurface parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const BandSurface&, const BandSurface&) = default;
};

/// Diagonal: half-twists plus twice the signed self-crossings. Off-diagonal:
/// signed crossings between the two bands.
SymIntMatrix linking_matrix(const BandSurface& s);

/// The black checkerboard surface of `col`. A spanning tree of the black Tait
/// graph is absorbed into a single 0-handle; every other crossing closes a
/// cycle in the tree and becomes a band.
BandSurface black_surface_bands(const KnotDiagram& d, const Coloring& col);

/// Euler number of the black surface: −2μ.
std::int64_t euler_checkerboard(const KnotDiagram& d, const Coloring& col);

struct SurfaceState {
  SymIntMatrix glmatrix;
  std::int64_t euler = 0;

  /// signature(glmatrix) + euler/2.
  std::int64_t conserved() const;

  /// `{"matrix": [[...]], "euler": e}`. Throws BadMatrix on a bad document or
  /// an odd Euler number.
  static SurfaceState from_json(std::string_view text);
  std::string to_json() const;

  friend bool operator==(const SurfaceState&, const SurfaceState&) = default;
};

/// G ↦ G ⊕ [sign], e ↦ e − 2·sign.
SurfaceState half_twist_move(const SurfaceState& st, int sign);

/// G ↦ [[G, b, 0], [bᵀ, a, sign], [0, sign, 0]]; e unchanged. Throws BadVector
/// when b has the wrong length.
SurfaceState tube_move(const SurfaceState& st, const std::vector<std::int64_t>& b, std::int64_t a, int sign);

/// Called after every step with the step number (1-based), the new state and
/// its conserved quantity.
using WalkObserver = std::function<void(std::size_t, const SurfaceState&, std::int64_t)>;

/// `steps` random S*-moves: half-twist and tube additions, and removals of
/// blocks the walk added earlier. Throws InternalInvariantViolation if the
/// conserved quantity ever changes.
SurfaceState random_sstar_walk(const SurfaceState& st, std::size_t steps, std::uint64_t seed,
                               const WalkObserver& observer = {});

}  // namespace glform
