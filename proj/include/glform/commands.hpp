#pragma once

// Command implementations behind the `glform` executable. Each returns the
// exit status and the text to print, so they can be driven from tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace glform {

enum class ColoringChoice { canonical, dual, both };
enum class Format { json, csv };

/// A knot given either as PD text or as a braid word.
struct KnotInput {
  std::string pd;
  std::string braid;
  std::optional<int> strands;
  bool has_pd() const { return !pd.empty(); }
  bool has_braid() const { return !braid.empty(); }
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;

CommandResult cmd_invariants(const KnotInput& in, ColoringChoice coloring, Format format);

/// Verifies every line of a JSON-lines knot table.
CommandResult cmd_verify_text(const std::string& table, Format format);
CommandResult cmd_verify(const std::string& table_path, Format format);

struct ObstructArgs {
  std::optional<std::int64_t> signature;
  std::optional<int> arf;
  std::optional<std::int64_t> determinant;
  /// Signature of the second knot for the distance bounds; 0 (the unknot) by default.
  std::int64_t other_signature = 0;
  std::optional<std::int64_t> tau;
  std::optional<std::int64_t> s;
  std::int64_t bound = 20;
  bool require_cyclic = false;
};

/// Missing σ / Arf / det are computed from `in` when it is given.
CommandResult cmd_obstruct(const KnotInput& in, ObstructArgs args);

/// Runs a seeded S*-walk from `state_json`, or from the black surface of `in`
/// when no state is given, and prints the conserved-quantity trace.
CommandResult cmd_sstar(const std::string& state_json, const KnotInput& in, ColoringChoice coloring,
                        std::uint64_t steps, std::uint64_t seed);

/// Band presentation of the black surface(s) of `in`, or the linking matrix of
/// an explicit band surface in text form.
CommandResult cmd_bands(const KnotInput& in, const std::string& surface_text, ColoringChoice coloring);

/// Returns the file contents when `arg` names a readable file, else `arg`.
std::string read_file_or_literal(const std::string& arg);

}  // namespace glform
