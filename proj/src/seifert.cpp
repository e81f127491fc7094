#include "glform/seifert.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "glform/diagram.hpp"
#include "glform/errors.hpp"

namespace glform {

namespace {

struct Cycle {
  int column;
  std::size_t first;
  std::size_t second;
};

}  // namespace

SeifertMatrix seifert_matrix_from_braid(std::span<const int> word, int strands) {
  if (strands < 1) throw MalformedBraid("strand count must be positive");
  std::vector<int> uses(strands, 0);
  for (int l : word) {
    if (l == 0 || std::abs(l) > strands - 1)
      throw MalformedBraid("letter " + std::to_string(l) + " out of range for " + std::to_string(strands) + " strands");
    ++uses[std::abs(l)];
  }
  for (int i = 1; i < strands; ++i)
    if (uses[i] == 0) throw DisconnectedSurface("generator " + std::to_string(i) + " does not occur");
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : word) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
  int len = 0;
  for (int p = 0; len == 0 || p != 0; p = perm[p]) ++len;
  if (len != strands) throw NotAKnot("braid closure has more than one component");

  std::vector<Cycle> cycles;
  for (int i = 1; i < strands; ++i) {
    std::size_t prev = word.size();
    for (std::size_t p = 0; p < word.size(); ++p) {
      if (std::abs(word[p]) != i) continue;
      if (prev != word.size()) cycles.push_back({i, prev, p});
      prev = p;
    }
  }

  auto sign = [&](std::size_t p) -> std::int64_t { return word[p] > 0 ? 1 : -1; };
  const std::size_t m = cycles.size();
  IntMatrix a(m, m);
  for (std::size_t x = 0; x < m; ++x) {
    const auto [i, s, t] = cycles[x];
    a(x, x) = -(sign(s) + sign(t)) / 2;
    for (std::size_t y = 0; y < m; ++y) {
      const auto [j, u, v] = cycles[y];
      if (j == i && u == t) {
        // Consecutive cycles share band t.
        if (sign(t) > 0)
          a(x, y) = 1;
        else
          a(y, x) = -1;
      } else if (j == i + 1) {
        if (s < u && u < t && t < v)
          a(x, y) = -1;
        else if (u < s && s < v && v < t)
          a(x, y) = 1;
      }
    }
  }

  SeifertMatrix out;
  out.a = std::move(a);
  out.discs = strands;
  out.bands = static_cast<int>(word.size());
  out.betti = out.bands - out.discs + 1;
  if (static_cast<std::size_t>(out.betti) != m) throw InternalInvariantViolation("cycle count differs from β₁");
  return out;
}

SeifertMatrix seifert_matrix_from_braid(std::span<const int> word) {
  return seifert_matrix_from_braid(word, inferred_strands(word));
}

SymIntMatrix symmetrized(const SeifertMatrix& s) {
  const std::size_t n = s.a.rows();
  SymIntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.set(i, j, s.a(i, j) + s.a(j, i));
  return out;
}

std::int64_t symmetrized_signature(const SeifertMatrix& s) { return signature(symmetrized(s)); }

int arf(const IntMatrix& a) {
  if (!a.square()) throw BadMatrix("Seifert matrix must be square");
  const std::size_t n = a.rows();
  if (n > 30) throw TooLarge("Arf enumeration needs at most 30 generators, got " + std::to_string(n));

  // q(x) = Σ a_kk x_k + Σ_{k<j} (a_kj + a_jk) x_k x_j mod 2; walk the Gray code
  // and update q one flipped coordinate at a time.
  std::vector<std::uint32_t> link(n, 0);
  std::vector<int> diag(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    diag[k] = static_cast<int>(a(k, k) & 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != k && ((a(k, j) + a(j, k)) & 1)) link[k] |= 1u << j;
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint32_t x = 0;
  int q = 0;
  std::uint64_t zeros = 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int k = std::countr_zero(step);
    q ^= diag[k] ^ (std::popcount(link[k] & x) & 1);
    x ^= 1u << k;
    if (q == 0) ++zeros;
  }
  return 2 * zeros > total ? 0 : 1;
}

}  // namespace glform
