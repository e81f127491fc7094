#pragma once

// Seifert matrices of braid closures.
//
// Seifert's algorithm on a closed braid gives one disc per strand and one
// half-twisted band per letter. H₁ is generated by the cycles running through
// two consecutive bands of the same generator, ordered by generator and then
// by position in the word. Entry (i,j) is lk(α_i, α_j⁺).

#include <cstdint>
#include <span>

#include "glform/forms.hpp"

namespace glform {

struct SeifertMatrix {
  IntMatrix a;
  int discs = 0;
  int bands = 0;
  /// First Betti number, bands − discs + 1; equals the dimension of `a`.
  int betti = 0;
};

/// Throws MalformedBraid, DisconnectedSurface when some generator
/// 1..strands−1 is missing from the word, and NotAKnot.
SeifertMatrix seifert_matrix_from_braid(std::span<const int> word, int strands);
SeifertMatrix seifert_matrix_from_braid(std::span<const int> word);

/// A + Aᵀ.
SymIntMatrix symmetrized(const SeifertMatrix& s);
std::int64_t symmetrized_signature(const SeifertMatrix& s);

/// Majority vote of q(x) = xᵀAx mod 2 over all of H₁(F;ℤ/2). Throws TooLarge
/// above 30 generators.
int arf(const IntMatrix& a);
inline int arf(const SeifertMatrix& s) { return arf(s.a); }

}  // namespace glform
