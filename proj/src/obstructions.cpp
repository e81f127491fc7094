#include "glform/obstructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "glform/errors.hpp"

namespace glform {

namespace {

// ⌈|x| / d⌉ for d > 0.
std::int64_t ceil_abs_div(std::int64_t x, std::int64_t d) {
  const std::int64_t a = x < 0 ? -x : x;
  return (a + d - 1) / d;
}

// Signature of [[l, m], [m, n]].
int binary_signature(std::int64_t l, std::int64_t m, std::int64_t n) {
  const std::int64_t det = l * n - m * m;
  if (det < 0) return 0;
  if (det > 0) return l > 0 ? 2 : -2;
  const std::int64_t trace = l + n;
  return trace > 0 ? 1 : trace < 0 ? -1 : 0;
}

ObstructionReport residue_report(std::string name, std::int64_t sigma, int arf, std::vector<int> allowed) {
  ObstructionReport r;
  r.test_name = std::move(name);
  r.inputs = {{"signature", sigma}, {"arf", arf}};
  const int res = mod8_residue(sigma, arf);
  r.inputs["residue"] = res;
  r.verdict = std::find(allowed.begin(), allowed.end(), res) == allowed.end() ? Verdict::obstructed
                                                                                : Verdict::not_obstructed;
  return r;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::obstructed:
      return "obstructed";
    case Verdict::not_obstructed:
      return "not_obstructed";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "obstructed") return Verdict::obstructed;
  if (s == "not_obstructed") return Verdict::not_obstructed;
  if (s == "inconclusive") return Verdict::inconclusive;
  throw BadMatrix("unknown verdict `" + std::string(s) + "`");
}

nlohmann::json ObstructionReport::to_json() const {
  return {{"test", test_name}, {"inputs", inputs}, {"verdict", to_string(verdict)}, {"witnesses", witnesses}};
}

ObstructionReport ObstructionReport::from_json(const nlohmann::json& j) {
  try {
    ObstructionReport r;
    r.test_name = j.at("test").get<std::string>();
    r.inputs = j.at("inputs");
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.witnesses = j.at("witnesses");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw BadMatrix(std::string("obstruction report: ") + e.what());
  }
}

std::int64_t gordian_lower_bound(std::int64_t s1, std::int64_t s2) { return ceil_abs_div(s1 - s2, 2); }

std::int64_t sharp_gordian_lower_bound(std::int64_t s1, std::int64_t s2) { return ceil_abs_div(s1 - s2, 6); }

int mod8_residue(std::int64_t sigma, int arf) {
  const std::int64_t r = (sigma + 4 * arf) % 8;
  return static_cast<int>(r < 0 ? r + 8 : r);
}

ObstructionReport moebius_b4_test(std::int64_t sigma, int arf) {
  return residue_report("moebius_b4", sigma, arf, {0, 2, 6});
}

ObstructionReport klein_bottle_test(std::int64_t sigma, int arf, Definiteness def) {
  auto r = def == Definiteness::positive ? residue_report("klein_bottle", sigma, arf, {0, 2, 4})
                                         : residue_report("klein_bottle", sigma, arf, {0, 4, 6});
  r.inputs["definiteness"] = def == Definiteness::positive ? "positive" : "negative";
  return r;
}

std::vector<BinaryForm> crosscap2_candidates(std::int64_t sigma, std::int64_t det, std::int64_t bound,
                                             bool require_cyclic) {
  std::vector<BinaryForm> out;
  if (bound < 0) return out;
  const std::int64_t target = det < 0 ? -det : det;
  const std::int64_t odd_start = bound % 2 ? -bound : -bound + 1;
  const std::int64_t even_start = bound % 2 ? -bound + 1 : -bound;
  for (std::int64_t l = odd_start; l <= bound; l += 2) {
    for (std::int64_t n = l; n <= bound; n += 2) {
      for (std::int64_t m = even_start; m <= bound; m += 2) {
        const std::int64_t d = l * n - m * m;
        if ((d < 0 ? -d : d) != target) continue;
        if (binary_signature(l, m, n) - (l + 2 * m + n) != sigma) continue;
        if (require_cyclic && std::gcd(std::gcd(l, m), n) != 1) continue;
        out.push_back({l, m, n});
      }
    }
  }
  return out;
}

ObstructionReport crosscap2_test(std::int64_t sigma, std::int64_t det, std::int64_t bound, bool require_cyclic) {
  ObstructionReport r;
  r.test_name = "crosscap2";
  r.inputs = {{"signature", sigma}, {"determinant", det}, {"bound", bound}, {"require_cyclic", require_cyclic}};
  for (const auto& f : crosscap2_candidates(sigma, det, bound, require_cyclic))
    r.witnesses.push_back(nlohmann::json::array({f.l, f.m, f.n}));
  r.verdict = r.witnesses.empty() ? Verdict::inconclusive : Verdict::not_obstructed;
  return r;
}

std::int64_t turaev_lower_bound(std::int64_t tau, std::int64_t s, std::int64_t sigma) {
  // Every term is |k|/2 for an integer k.
  return std::max({ceil_abs_div(2 * tau + sigma, 2), ceil_abs_div(s + sigma, 2), ceil_abs_div(2 * tau - s, 2)});
}

}  // namespace glform
