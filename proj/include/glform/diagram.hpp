#pragma once

// Knot diagrams in planar-diagram (PD) form.
//
// A crossing is a 4-tuple of edge labels listed counterclockwise starting at
// the incoming under-edge. Slot 2 is therefore the outgoing under-edge and the
// over strand occupies slots 1 and 3. Corner i of a crossing is the region
// between slots i and i+1 (mod 4).
//
// Diagrams are normalized on construction: edges are relabelled 1..2n in
// traversal order, starting from the smallest input label, with the
// orientation fixed by the under strands. After normalization the over strand
// at (a,b,c,d) runs b→d iff d ≡ b+1, where 2n+1 ≡ 1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glform {

struct Crossing {
  std::array<int, 4> edges{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A position on the boundary of a crossing.
struct Slot {
  std::size_t crossing = 0;
  int slot = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

class KnotDiagram {
 public:
  /// The crossingless unknot.
  KnotDiagram() = default;
  static KnotDiagram unknot() { return {}; }

  /// Validates raw PD tuples and normalizes the labels.
  /// Throws MalformedPD for bad labels or inconsistent orientation and
  /// NotAKnot when the strands close up into more than one component.
  static KnotDiagram from_pd(const std::vector<std::array<int, 4>>& tuples);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t edge_count() const { return 2 * crossings_.size(); }
  bool empty() const { return crossings_.empty(); }

  int edge_at(Slot s) const { return crossings_[s.crossing].edges[s.slot]; }
  /// The other end of the edge occupying `s`.
  Slot opposite(Slot s) const;
  /// Slot (1 or 3) through which the over strand enters crossing `c`.
  int over_in_slot(std::size_t c) const { return over_in_[c]; }
  bool is_outgoing(Slot s) const { return s.slot == 2 || s.slot == 4 - over_in_[s.crossing]; }
  /// Where edge `label` ends (its head) and starts (its tail).
  Slot head(int label) const;
  Slot tail(int label) const;

  /// Crossing sign under the right-hand rule; +1 when the over strand enters at slot 3.
  int sign(std::size_t c) const { return over_in_[c] == 3 ? 1 : -1; }
  int writhe() const;

  std::vector<std::array<int, 4>> tuples() const;
  /// `X(a,b,c,d) X(...)`, or `unknot`.
  std::string to_pd() const;

  friend bool operator==(const KnotDiagram& a, const KnotDiagram& b) { return a.crossings_ == b.crossings_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::array<Slot, 2>> ends_;  // indexed by label-1
  std::vector<int> over_in_;
};

/// Parses whitespace-separated `X(a,b,c,d)` terms, or the literal `unknot`.
/// Errors carry a line:column position.
KnotDiagram parse_pd(std::string_view text);

/// Parses integers separated by whitespace or commas, e.g. `1 1 1` or `[1,-2,1,-2]`.
std::vector<int> parse_braid(std::string_view text);
/// max |letter| + 1, or 1 for the empty word.
int inferred_strands(std::span<const int> word);

/// PD diagram of the closure of a braid on `strands` strands. Letter +i is a
/// positive crossing between strands i and i+1.
KnotDiagram braid_to_diagram(std::span<const int> word, int strands);
inline KnotDiagram braid_to_diagram(std::span<const int> word) {
  return braid_to_diagram(word, inferred_strands(word));
}

/// Which side of a directed edge a face lies on.
struct EdgeSide {
  int edge = 0;
  bool left = false;
  friend bool operator==(const EdgeSide&, const EdgeSide&) = default;
};

struct FaceSet {
  std::vector<std::vector<EdgeSide>> faces;
  /// around[c][i] is the face at corner i of crossing c.
  std::vector<std::array<std::size_t, 4>> around;

  std::size_t size() const { return faces.size(); }
};

FaceSet faces(const KnotDiagram& d);

enum class Shade { white, black };

struct Coloring {
  FaceSet faces;
  std::vector<Shade> shade;
  /// White faces ordered by their smallest incident edge label.
  std::vector<std::size_t> white_regions;
  std::vector<std::size_t> black_regions;

  Shade corner(std::size_t crossing, int i) const { return shade[faces.around[crossing][i & 3]]; }
  Coloring dual() const;
};

/// The canonical coloring (the face to the left of edge 1 is white) and its
/// shade-swapped dual.
std::pair<Coloring, Coloring> checkerboard(const KnotDiagram& d);

enum class CrossingType { I, II };

struct CrossingClass {
  std::vector<int> eta;
  std::vector<CrossingType> type;
};

/// Incidence number and type of every crossing relative to `col`.
CrossingClass classify_crossings(const KnotDiagram& d, const Coloring& col);

/// μ = Σ η(C) over type II crossings.
std::int64_t correction_term(const CrossingClass& cls);

/// All crossings switched.
KnotDiagram mirror(const KnotDiagram& d);
/// All edge orientations reversed.
KnotDiagram reverse(const KnotDiagram& d);
KnotDiagram switch_crossing(const KnotDiagram& d, std::size_t c);
/// Band sum along edge 2n of `a` and the last edge of `b`.
KnotDiagram connected_sum(const KnotDiagram& a, const KnotDiagram& b);

bool is_alternating(const KnotDiagram& d);
/// A crossing is nugatory when one face touches it at two corners.
bool has_nugatory_crossing(const KnotDiagram& d);

}  // namespace glform
