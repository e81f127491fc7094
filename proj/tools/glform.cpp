#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "glform/commands.hpp"

using namespace glform;

namespace {

struct KnotFlags {
  std::string pd;
  std::string braid;
  int strands = 0;

  void attach(CLI::App* app) {
    app->add_option("--pd", pd, "PD code, or a file containing one");
    app->add_option("--braid", braid, "braid word, e.g. \"1 -2 1 -2\"");
    app->add_option("--strands", strands, "strand count (default: largest generator + 1)");
  }
  KnotInput input() const {
    KnotInput in;
    if (!pd.empty()) in.pd = read_file_or_literal(pd);
    in.braid = braid;
    if (strands > 0) in.strands = strands;
    return in;
  }
};

const std::map<std::string, ColoringChoice> kColorings = {
    {"canonical", ColoringChoice::canonical}, {"dual", ColoringChoice::dual}, {"both", ColoringChoice::both}};
const std::map<std::string, Format> kFormats = {{"json", Format::json}, {"csv", Format::csv}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot signatures from Goeritz matrices, Seifert matrices and spanning surfaces"};
  app.require_subcommand(1);

  ColoringChoice coloring = ColoringChoice::both;
  Format format = Format::json;

  KnotFlags inv_knot;
  auto* inv = app.add_subcommand("invariants", "signature, determinant, Goeritz data and (for braids) Seifert data");
  inv_knot.attach(inv);
  inv->add_option("--coloring", coloring)->transform(CLI::CheckedTransformer(kColorings, CLI::ignore_case));
  inv->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  std::string table;
  auto* ver = app.add_subcommand("verify", "check every entry of a JSON-lines knot table");
  ver->add_option("table", table, "table path")->required();
  ver->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  KnotFlags obs_knot;
  ObstructArgs oargs;
  auto* obs = app.add_subcommand("obstruct", "distance bounds and non-orientable genus obstructions");
  obs_knot.attach(obs);
  obs->add_option("--signature", oargs.signature);
  obs->add_option("--arf", oargs.arf)->check(CLI::Range(0, 1));
  obs->add_option("--det", oargs.determinant);
  obs->add_option("--other-signature", oargs.other_signature, "signature of the second knot (default 0)");
  obs->add_option("--tau", oargs.tau);
  obs->add_option("--s", oargs.s, "Rasmussen s-invariant");
  obs->add_option("--bound", oargs.bound, "search radius for the crosscap-two forms")->check(CLI::NonNegativeNumber);
  obs->add_flag("--cyclic", oargs.require_cyclic, "require gcd(l,m,n) = 1");

  KnotFlags ss_knot;
  std::string state;
  std::uint64_t steps = 1000;
  std::uint64_t seed = 0;
  auto* ss = app.add_subcommand("sstar", "random S*-walk with conserved-quantity trace");
  ss_knot.attach(ss);
  ss->add_option("--state", state, "state JSON {\"matrix\":...,\"euler\":...}, or a file containing it");
  ss->add_option("--steps", steps);
  ss->add_option("--seed", seed);
  ss->add_option("--coloring", coloring)->transform(CLI::CheckedTransformer(kColorings, CLI::ignore_case));

  KnotFlags band_knot;
  std::string surface;
  auto* bands = app.add_subcommand("bands", "black-surface band presentations and linking matrices");
  band_knot.attach(bands);
  bands->add_option("--surface", surface, "band surface text, or a file containing it");
  bands->add_option("--coloring", coloring)->transform(CLI::CheckedTransformer(kColorings, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  CommandResult r;
  if (*inv) {
    r = cmd_invariants(inv_knot.input(), coloring, format);
  } else if (*ver) {
    r = cmd_verify(table, format);
  } else if (*obs) {
    r = cmd_obstruct(obs_knot.input(), oargs);
  } else if (*ss) {
    r = cmd_sstar(state.empty() ? "" : read_file_or_literal(state), ss_knot.input(), coloring, steps, seed);
  } else if (*bands) {
    r = cmd_bands(band_knot.input(), surface.empty() ? "" : read_file_or_literal(surface), coloring);
  }
  (r.exit_code == kInputError ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}
