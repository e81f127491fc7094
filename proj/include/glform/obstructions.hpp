#pragma once

// Distance bounds and non-orientable genus obstructions derived from the
// signature, the Arf invariant and the determinant.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace glform {

enum class Verdict { obstructed, not_obstructed, inconclusive };

std::string to_string(Verdict v);
/// Throws BadMatrix on an unknown name.
Verdict verdict_from_string(std::string_view s);

struct ObstructionReport {
  std::string test_name;
  nlohmann::json inputs = nlohmann::json::object();
  Verdict verdict = Verdict::inconclusive;
  nlohmann::json witnesses = nlohmann::json::array();

  nlohmann::json to_json() const;
  static ObstructionReport from_json(const nlohmann::json& j);

  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

/// ⌈|σ₁ − σ₂| / 2⌉.
std::int64_t gordian_lower_bound(std::int64_t s1, std::int64_t s2);
/// ⌈|σ₁ − σ₂| / 6⌉.
std::int64_t sharp_gordian_lower_bound(std::int64_t s1, std::int64_t s2);

/// (σ + 4·arf) mod 8 in 0..7.
int mod8_residue(std::int64_t sigma, int arf);

/// Bounding a Möbius band in B⁴ forces σ + 4·Arf ≡ 0, ±2 (mod 8).
ObstructionReport moebius_b4_test(std::int64_t sigma, int arf);

enum class Definiteness { positive, negative };

/// Klein bottle with definite intersection form: residue in {0,2,4} (positive)
/// or {0,4,6} (negative).
ObstructionReport klein_bottle_test(std::int64_t sigma, int arf, Definiteness def);

/// [[l, m], [m, n]].
struct BinaryForm {
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
  friend auto operator<=>(const BinaryForm&, const BinaryForm&) = default;
};

/// Forms with |l|, |m|, |n| <= bound, l and n odd, m even, |ln − m²| = det and
/// sign − (l + 2m + n) = σ; with `require_cyclic` also gcd(l, m, n) = 1.
/// (l, m, n) and (n, m, l) are reported once, with l <= n.
std::vector<BinaryForm> crosscap2_candidates(std::int64_t sigma, std::int64_t det, std::int64_t bound,
                                             bool require_cyclic);

/// Wraps the search: witnesses when found, otherwise inconclusive. A bounded
/// search never reports an obstruction.
ObstructionReport crosscap2_test(std::int64_t sigma, std::int64_t det, std::int64_t bound, bool require_cyclic);

/// max(|τ + σ/2|, |(s + σ)/2|, |τ − s/2|), each rounded up.
std::int64_t turaev_lower_bound(std::int64_t tau, std::int64_t s, std::int64_t sigma);

}  // namespace glform
