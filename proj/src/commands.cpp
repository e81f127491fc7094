#include "glform/commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "glform/diagram.hpp"
#include "glform/errors.hpp"
#include "glform/goeritz.hpp"
#include "glform/obstructions.hpp"
#include "glform/seifert.hpp"
#include "glform/surfaces.hpp"
#include "json.hpp"

namespace glform {

namespace {

using nlohmann::json;

struct Knot {
  KnotDiagram diagram;
  bool from_braid = false;
  std::vector<int> word;
  int strands = 0;
};

Knot load(const KnotInput& in) {
  if (in.has_pd() && in.has_braid()) throw MalformedPD("give either a PD code or a braid, not both");
  Knot k;
  if (in.has_braid()) {
    k.from_braid = true;
    k.word = parse_braid(in.braid);
    k.strands = in.strands.value_or(inferred_strands(k.word));
    k.diagram = braid_to_diagram(k.word, k.strands);
  } else if (in.has_pd()) {
    k.diagram = parse_pd(in.pd);
  } else {
    throw MalformedPD("no knot given; use --pd or --braid");
  }
  return k;
}

json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json smith_json(const SymIntMatrix& m) {
  json out = json::array();
  for (const auto& d : smith_invariants(m)) out.push_back(big(d));
  return out;
}

json inertia_json(const Inertia& in) { return json::array({in.positive, in.negative, in.zero}); }

std::optional<int> arf_of(const Knot& k) {
  if (k.from_braid) {
    if (k.diagram.empty() && k.word.empty()) return 0;
    return arf(seifert_matrix_from_braid(k.word, k.strands));
  }
  if (k.diagram.empty()) return 0;
  return std::nullopt;
}

json coloring_json(const KnotDiagram& d, const Coloring& col) {
  const GoeritzData g = goeritz(d, col);
  const Inertia in = inertia(g.reduced);
  return {{"white_regions", g.white_regions.size()},
          {"reduced_goeritz", g.reduced.to_rows()},
          {"inertia", inertia_json(in)},
          {"mu", g.mu},
          {"signature", in.signature() - g.mu}};
}

CommandResult input_error(const std::string& what) {
  return {kInputError, json{{"error", what}}.dump(2) + "\n"};
}

CommandResult run_guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const InternalInvariantViolation& e) {
    return {kVerificationFailed, json{{"error", e.what()}}.dump(2) + "\n"};
  } catch (const Error& e) {
    return input_error(e.what());
  }
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// ---- verify ---------------------------------------------------------------

struct EntryResult {
  json report;
  int status = kOk;
};

const std::vector<std::string> kExpectedKeys = {"signature", "determinant", "arf", "mu_canonical"};

// Throws std::invalid_argument with a schema message.
KnotInput entry_input(const json& e) {
  if (!e.is_object()) throw std::invalid_argument("entry is not a JSON object");
  for (auto it = e.begin(); it != e.end(); ++it) {
    static const std::vector<std::string> allowed = {"name", "pd", "braid", "strands", "expected"};
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw std::invalid_argument("unknown field `" + it.key() + "`");
  }
  if (!e.contains("name") || !e["name"].is_string()) throw std::invalid_argument("`name` must be a string");
  KnotInput in;
  if (e.contains("pd")) {
    if (!e["pd"].is_string()) throw std::invalid_argument("`pd` must be a string");
    in.pd = e["pd"].get<std::string>();
  }
  if (e.contains("braid")) {
    const auto& b = e["braid"];
    if (b.is_string()) {
      in.braid = b.get<std::string>();
    } else if (b.is_array()) {
      std::ostringstream os;
      for (const auto& x : b) {
        if (!x.is_number_integer()) throw std::invalid_argument("`braid` entries must be integers");
        os << x.get<int>() << ' ';
      }
      // A single space keeps an empty word distinguishable from a missing one.
      in.braid = b.empty() ? " " : os.str();
    } else {
      throw std::invalid_argument("`braid` must be a string or an integer array");
    }
  }
  if (e.contains("strands")) {
    if (!e["strands"].is_number_integer()) throw std::invalid_argument("`strands` must be an integer");
    in.strands = e["strands"].get<int>();
  }
  if (!in.has_pd() && !in.has_braid()) throw std::invalid_argument("entry needs `pd` or `braid`");
  if (e.contains("expected")) {
    const auto& x = e["expected"];
    if (!x.is_object()) throw std::invalid_argument("`expected` must be an object");
    for (auto it = x.begin(); it != x.end(); ++it) {
      if (std::find(kExpectedKeys.begin(), kExpectedKeys.end(), it.key()) == kExpectedKeys.end())
        throw std::invalid_argument("unknown expected invariant `" + it.key() + "`");
      if (!it.value().is_number_integer())
        throw std::invalid_argument("expected `" + it.key() + "` must be an integer");
    }
  }
  return in;
}

EntryResult verify_entry(const json& e, std::size_t line) {
  EntryResult r;
  r.report = {{"line", line}};
  if (e.is_object() && e.contains("name") && e["name"].is_string()) r.report["name"] = e["name"];

  KnotInput in;
  try {
    in = entry_input(e);
  } catch (const std::invalid_argument& err) {
    r.report["status"] = "error";
    r.report["error"] = std::string("schema: ") + err.what();
    r.status = kInputError;
    return r;
  }

  json checks = json::object();
  json values = json::object();
  try {
    // An entry with both inputs is checked on both diagrams.
    std::vector<Knot> knots;
    if (in.has_pd()) knots.push_back(load({in.pd, "", std::nullopt}));
    if (in.has_braid()) knots.push_back(load({"", in.braid, in.strands}));

    std::optional<std::int64_t> sigma;
    std::optional<BigInt> det;
    std::optional<int> arf_value;
    std::optional<std::int64_t> mu_canonical;
    bool consistent = true;
    bool dual_ok = true, deleted_ok = true, seifert_ok = true, alt_ok = true, bridge_ok = true;
    bool any_alt = false, any_braid = false;
    for (const Knot& k : knots) {
      const KnotDiagram& d = k.diagram;
      auto [canonical, dual] = checkerboard(d);
      std::int64_t s_col[2] = {0, 0};
      int idx = 0;
      for (const Coloring* col : {&canonical, &dual}) {
        const GoeritzData g0 = goeritz(d, *col, 0);
        const Inertia in0 = inertia(g0.reduced);
        const BigInt det0 = abs(determinant(g0.reduced));
        const auto smith0 = smith_invariants(g0.reduced);
        s_col[idx++] = in0.signature() - g0.mu;
        for (std::size_t del = 1; del < col->white_regions.size(); ++del) {
          const GoeritzData g = goeritz(d, *col, del);
          if (!(inertia(g.reduced) == in0) || abs(determinant(g.reduced)) != det0 ||
              smith_invariants(g.reduced) != smith0)
            deleted_ok = false;
        }
        const SymIntMatrix lk = linking_matrix(black_surface_bands(d, *col));
        if (!(inertia(lk) == in0) || abs(determinant(lk)) != det0 || smith_invariants(lk) != smith0)
          bridge_ok = false;
      }
      if (s_col[0] != s_col[1]) dual_ok = false;
      const std::int64_t s = s_col[0];
      const BigInt dt = abs(determinant(goeritz(d, canonical).reduced));
      const std::int64_t mu = correction_term(classify_crossings(d, canonical));
      if (sigma && (*sigma != s || *det != dt)) consistent = false;
      sigma = s;
      det = dt;
      if (!mu_canonical) mu_canonical = mu;

      if (is_alternating(d) && !has_nugatory_crossing(d)) {
        any_alt = true;
        if (alternating_signature(d) != s) alt_ok = false;
      }
      if (k.from_braid && !k.word.empty()) {
        any_braid = true;
        const SeifertMatrix sm = seifert_matrix_from_braid(k.word, k.strands);
        const SymIntMatrix sym = symmetrized(sm);
        IntMatrix skew(sm.a.rows(), sm.a.cols());
        for (std::size_t i = 0; i < sm.a.rows(); ++i)
          for (std::size_t j = 0; j < sm.a.cols(); ++j) skew(i, j) = sm.a(i, j) - sm.a(j, i);
        if (signature(sym) != s || abs(determinant(sym)) != dt || determinant(skew) != 1) seifert_ok = false;
        if (sm.a.rows() <= 30) arf_value = arf(sm);
      } else if (d.empty()) {
        arf_value = 0;
      }
    }

    checks["dual_coloring"] = dual_ok;
    checks["deleted_region"] = deleted_ok;
    checks["black_surface_bridge"] = bridge_ok;
    if (knots.size() > 1) checks["pd_braid_agreement"] = consistent;
    if (any_braid) checks["seifert_goeritz"] = seifert_ok;
    if (any_alt) checks["alternating_formula"] = alt_ok;

    values["signature"] = *sigma;
    values["determinant"] = big(*det);
    values["mu_canonical"] = *mu_canonical;
    if (arf_value) values["arf"] = *arf_value;

    if (e.contains("expected")) {
      for (auto it = e["expected"].begin(); it != e["expected"].end(); ++it) {
        const std::string key = it.key();
        if (!values.contains(key)) {
          checks["expected_" + key] = false;
          r.report["messages"].push_back(key + " is not available for this input");
          continue;
        }
        const bool ok = values[key] == it.value();
        checks["expected_" + key] = ok;
        if (!ok) r.report["messages"].push_back(key + ": expected " + it.value().dump() + ", got " + values[key].dump());
      }
    }
  } catch (const InternalInvariantViolation& err) {
    checks["internal"] = false;
    r.report["messages"].push_back(err.what());
  } catch (const Error& err) {
    r.report["status"] = "error";
    r.report["error"] = err.what();
    r.status = kInputError;
    return r;
  }

  bool pass = true;
  for (const auto& [k, v] : checks.items()) pass = pass && v.get<bool>();
  r.report["checks"] = checks;
  r.report["invariants"] = values;
  r.report["status"] = pass ? "pass" : "fail";
  r.status = pass ? kOk : kVerificationFailed;
  return r;
}

}  // namespace

std::string read_file_or_literal(const std::string& arg) {
  std::ifstream f(arg);
  if (!f) return arg;
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

CommandResult cmd_invariants(const KnotInput& in, ColoringChoice coloring, Format format) {
  return run_guarded([&] {
    const Knot k = load(in);
    const KnotDiagram& d = k.diagram;
    auto [canonical, dual] = checkerboard(d);
    const std::int64_t sigma = gl_signature(d);

    json r;
    r["pd"] = d.to_pd();
    r["crossings"] = d.crossing_count();
    r["writhe"] = d.writhe();
    r["signature"] = sigma;
    r["determinant"] = big(knot_determinant(d));
    r["mu_canonical"] = correction_term(classify_crossings(d, canonical));
    r["mu_dual"] = correction_term(classify_crossings(d, dual));
    r["alternating"] = is_alternating(d);
    if (is_alternating(d) && !has_nugatory_crossing(d)) r["alternating_signature"] = alternating_signature(d);
    json cols = json::object();
    if (coloring != ColoringChoice::dual) cols["canonical"] = coloring_json(d, canonical);
    if (coloring != ColoringChoice::canonical) cols["dual"] = coloring_json(d, dual);
    r["colorings"] = cols;
    if (k.from_braid) {
      r["braid"] = k.word;
      r["strands"] = k.strands;
      const SeifertMatrix sm = seifert_matrix_from_braid(k.word, k.strands);
      r["seifert"] = {{"matrix", sm.a.to_rows()}, {"betti", sm.betti}};
      r["symmetrized_signature"] = symmetrized_signature(sm);
    }
    const auto a = arf_of(k);
    r["arf"] = a ? json(*a) : json(nullptr);

    if (format == Format::csv) {
      std::ostringstream os;
      os << "signature,determinant,mu_canonical,mu_dual,arf\n";
      os << csv_cell(r["signature"]) << ',' << csv_cell(r["determinant"]) << ',' << csv_cell(r["mu_canonical"]) << ','
         << csv_cell(r["mu_dual"]) << ',' << csv_cell(r["arf"]) << '\n';
      return CommandResult{kOk, os.str()};
    }
    return CommandResult{kOk, r.dump(2) + "\n"};
  });
}

CommandResult cmd_verify_text(const std::string& table, Format format) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream is(table);
    std::string line;
    std::size_t no = 0;
    while (std::getline(is, line)) {
      ++no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      lines.emplace_back(no, line);
    }
  }

  std::vector<EntryResult> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      json e;
      try {
        e = json::parse(lines[i].second);
      } catch (const json::exception& err) {
        results[i].report = {{"line", lines[i].first}, {"status", "error"}, {"error", std::string("schema: ") + err.what()}};
        results[i].status = kInputError;
        continue;
      }
      results[i] = verify_entry(e, lines[i].first);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::future<void>> pool;
  for (std::size_t t = 0; t < std::min(threads, lines.size()); ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  int exit_code = kOk;
  std::size_t passed = 0, failed = 0, errors = 0;
  json entries = json::array();
  for (const auto& r : results) {
    exit_code = std::max(exit_code, r.status);
    if (r.status == kOk) ++passed;
    else if (r.status == kVerificationFailed) ++failed;
    else ++errors;
    entries.push_back(r.report);
  }

  if (format == Format::csv) {
    std::ostringstream os;
    os << "line,name,status,signature,determinant,mu_canonical,arf\n";
    for (const auto& r : entries) {
      const json inv = r.value("invariants", json::object());
      os << r["line"] << ',' << csv_cell(r.value("name", json(nullptr))) << ',' << csv_cell(r["status"]) << ','
         << csv_cell(inv.value("signature", json(nullptr))) << ',' << csv_cell(inv.value("determinant", json(nullptr)))
         << ',' << csv_cell(inv.value("mu_canonical", json(nullptr))) << ','
         << csv_cell(inv.value("arf", json(nullptr))) << '\n';
    }
    return {exit_code, os.str()};
  }
  json out = {{"entries", entries}, {"passed", passed}, {"failed", failed}, {"errors", errors}};
  return {exit_code, out.dump(2) + "\n"};
}

CommandResult cmd_verify(const std::string& table_path, Format format) {
  std::ifstream f(table_path);
  if (!f) return input_error("cannot read table `" + table_path + "`");
  std::ostringstream os;
  os << f.rdbuf();
  return cmd_verify_text(os.str(), format);
}

CommandResult cmd_obstruct(const KnotInput& in, ObstructArgs args) {
  return run_guarded([&] {
    if (in.has_pd() || in.has_braid()) {
      const Knot k = load(in);
      if (!args.signature) args.signature = gl_signature(k.diagram);
      if (!args.determinant) args.determinant = knot_determinant(k.diagram).get_si();
      if (!args.arf) {
        if (auto a = arf_of(k)) args.arf = *a;
      }
    }
    if (!args.signature) throw MalformedPD("obstruct needs --signature or a knot");
    if (args.arf && *args.arf != 0 && *args.arf != 1) throw BadVector("Arf invariant must be 0 or 1");
    const std::int64_t sigma = *args.signature;

    json r;
    r["inputs"] = {{"signature", sigma}};
    if (args.arf) r["inputs"]["arf"] = *args.arf;
    if (args.determinant) r["inputs"]["determinant"] = *args.determinant;
    r["bounds"] = {{"other_signature", args.other_signature},
                   {"gordian", gordian_lower_bound(sigma, args.other_signature)},
                   {"sharp_gordian", sharp_gordian_lower_bound(sigma, args.other_signature)}};
    if (args.tau && args.s) r["bounds"]["turaev"] = turaev_lower_bound(*args.tau, *args.s, sigma);

    json reports = json::array();
    if (args.arf) {
      reports.push_back(moebius_b4_test(sigma, *args.arf).to_json());
      reports.push_back(klein_bottle_test(sigma, *args.arf, Definiteness::positive).to_json());
      reports.push_back(klein_bottle_test(sigma, *args.arf, Definiteness::negative).to_json());
    }
    if (args.determinant)
      reports.push_back(crosscap2_test(sigma, *args.determinant, args.bound, args.require_cyclic).to_json());
    r["reports"] = reports;
    return CommandResult{kOk, r.dump(2) + "\n"};
  });
}

CommandResult cmd_sstar(const std::string& state_json, const KnotInput& in, ColoringChoice coloring,
                        std::uint64_t steps, std::uint64_t seed) {
  return run_guarded([&] {
    SurfaceState st;
    if (!state_json.empty()) {
      st = SurfaceState::from_json(state_json);
    } else {
      const Knot k = load(in);
      auto [canonical, dual] = checkerboard(k.diagram);
      const Coloring& col = coloring == ColoringChoice::dual ? dual : canonical;
      st = {linking_matrix(black_surface_bands(k.diagram, col)), euler_checkerboard(k.diagram, col)};
    }
    std::vector<std::int64_t> trace;
    trace.reserve(steps);
    const SurfaceState end =
        random_sstar_walk(st, steps, seed, [&](std::size_t, const SurfaceState&, std::int64_t v) { trace.push_back(v); });
    json r = {{"initial", json::parse(st.to_json())},
              {"conserved", st.conserved()},
              {"steps", steps},
              {"seed", seed},
              {"trace", trace},
              {"final", json::parse(end.to_json())}};
    return CommandResult{kOk, r.dump() + "\n"};
  });
}

CommandResult cmd_bands(const KnotInput& in, const std::string& surface_text, ColoringChoice coloring) {
  return run_guarded([&] {
    auto describe = [](const BandSurface& s) {
      const SymIntMatrix lk = linking_matrix(s);
      return json{{"bands", s.to_string()},
                  {"linking_matrix", lk.to_rows()},
                  {"inertia", inertia_json(inertia(lk))},
                  {"determinant", big(determinant(lk))},
                  {"smith", smith_json(lk)}};
    };
    if (!surface_text.empty()) return CommandResult{kOk, describe(BandSurface::parse(surface_text)).dump(2) + "\n"};

    const Knot k = load(in);
    auto [canonical, dual] = checkerboard(k.diagram);
    json r = json::object();
    auto one = [&](const Coloring& col) {
      json j = describe(black_surface_bands(k.diagram, col));
      const GoeritzData g = goeritz(k.diagram, col);
      j["euler"] = euler_checkerboard(k.diagram, col);
      j["mu"] = g.mu;
      j["goeritz"] = {{"reduced", g.reduced.to_rows()},
                      {"inertia", inertia_json(inertia(g.reduced))},
                      {"determinant", big(determinant(g.reduced))},
                      {"smith", smith_json(g.reduced)}};
      return j;
    };
    if (coloring != ColoringChoice::dual) r["canonical"] = one(canonical);
    if (coloring != ColoringChoice::canonical) r["dual"] = one(dual);
    return CommandResult{kOk, r.dump(2) + "\n"};
  });
}

}  // namespace glform
