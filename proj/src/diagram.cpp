#include "glform/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "glform/errors.hpp"

namespace glform {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Face id of every corner, found by walking corner (c, i) -> far end of slot i+1.
// Works on any validated diagram; planarity is judged by the face count.
std::vector<std::array<std::size_t, 4>> trace_corners(const KnotDiagram& d, std::size_t& face_count) {
  const std::size_t n = d.crossing_count();
  std::vector<std::array<std::size_t, 4>> around(n);
  for (auto& a : around) a.fill(kNone);
  face_count = 0;
  for (std::size_t c = 0; c < n; ++c) {
    for (int i = 0; i < 4; ++i) {
      if (around[c][i] != kNone) continue;
      Slot cur{c, i};
      while (around[cur.crossing][cur.slot] == kNone) {
        around[cur.crossing][cur.slot] = face_count;
        cur = d.opposite({cur.crossing, (cur.slot + 1) & 3});
      }
      ++face_count;
    }
  }
  return around;
}

std::string position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace

KnotDiagram KnotDiagram::from_pd(const std::vector<std::array<int, 4>>& tuples) {
  const std::size_t n = tuples.size();
  if (n == 0) throw MalformedPD("PD code has no crossings; use the literal `unknot`");

  std::map<int, std::vector<Slot>> occurrences;
  for (std::size_t c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      const int label = tuples[c][s];
      if (label <= 0) throw MalformedPD("edge labels must be positive, got " + std::to_string(label));
      occurrences[label].push_back({c, s});
    }
  }
  for (const auto& [label, slots] : occurrences) {
    if (slots.size() != 2)
      throw MalformedPD("edge label " + std::to_string(label) + " appears " + std::to_string(slots.size()) +
                        " times, expected 2");
  }

  auto far_end = [&](Slot s) {
    const auto& pair = occurrences.at(tuples[s.crossing][s.slot]);
    return pair[0] == s ? pair[1] : pair[0];
  };

  // Follow the strand through each crossing (slot k -> slot k+2) from the
  // first incoming under-edge.
  const std::size_t edges = 2 * n;
  std::vector<Slot> entries;
  const Slot start{0, 0};
  Slot cur = start;
  do {
    entries.push_back(cur);
    if (entries.size() > edges) throw InternalInvariantViolation("strand traversal did not close");
    cur = far_end({cur.crossing, (cur.slot + 2) & 3});
  } while (!(cur == start));
  if (entries.size() < edges) throw NotAKnot("diagram has more than one component");

  std::vector<int> over_in(n, 0);
  std::vector<bool> under_seen(n, false);
  for (const Slot& e : entries) {
    if (e.slot == 0) {
      under_seen[e.crossing] = true;
    } else if (e.slot == 2) {
      throw MalformedPD("under strand at crossing " + std::to_string(e.crossing + 1) +
                        " runs against the traversal orientation");
    } else {
      over_in[e.crossing] = e.slot;
    }
  }
  for (std::size_t c = 0; c < n; ++c)
    if (!under_seen[c] || over_in[c] == 0) throw MalformedPD("crossing " + std::to_string(c + 1) + " is not traversed consistently");

  // Relabel in traversal order, starting from the smallest input label.
  std::size_t first = 0;
  for (std::size_t k = 1; k < edges; ++k)
    if (tuples[entries[k].crossing][entries[k].slot] < tuples[entries[first].crossing][entries[first].slot]) first = k;
  std::map<int, int> relabel;
  for (std::size_t k = 0; k < edges; ++k)
    relabel[tuples[entries[k].crossing][entries[k].slot]] = static_cast<int>((k + edges - first) % edges) + 1;

  KnotDiagram d;
  d.crossings_.resize(n);
  d.ends_.resize(edges);
  std::vector<int> filled(edges, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      const int label = relabel.at(tuples[c][s]);
      d.crossings_[c].edges[s] = label;
      d.ends_[label - 1][filled[label - 1]++] = {c, s};
    }
  }
  d.over_in_ = std::move(over_in);

  std::size_t face_count = 0;
  trace_corners(d, face_count);
  if (face_count != n + 2)
    throw MalformedPD("tuples do not describe a planar diagram (" + std::to_string(face_count) + " faces, expected " +
                      std::to_string(n + 2) + ")");
  return d;
}

Slot KnotDiagram::opposite(Slot s) const {
  const auto& pair = ends_[edge_at(s) - 1];
  return pair[0] == s ? pair[1] : pair[0];
}

Slot KnotDiagram::head(int label) const {
  const auto& pair = ends_.at(label - 1);
  return is_outgoing(pair[0]) ? pair[1] : pair[0];
}

Slot KnotDiagram::tail(int label) const {
  const auto& pair = ends_.at(label - 1);
  return is_outgoing(pair[0]) ? pair[0] : pair[1];
}

int KnotDiagram::writhe() const {
  int w = 0;
  for (std::size_t c = 0; c < crossing_count(); ++c) w += sign(c);
  return w;
}

std::vector<std::array<int, 4>> KnotDiagram::tuples() const {
  std::vector<std::array<int, 4>> out;
  out.reserve(crossings_.size());
  for (const auto& x : crossings_) out.push_back(x.edges);
  return out;
}

std::string KnotDiagram::to_pd() const {
  if (empty()) return "unknot";
  std::ostringstream os;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& e = crossings_[c].edges;
    if (c) os << ' ';
    os << "X(" << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ')';
  }
  return os.str();
}

KnotDiagram parse_pd(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto fail = [&](const std::string& what) -> KnotDiagram {
    throw MalformedPD("PD " + position(text, i) + ": " + what);
  };

  skip();
  if (i == text.size()) fail("empty input");
  {
    std::size_t j = i;
    while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
    std::string word(text.substr(i, j - i));
    std::transform(word.begin(), word.end(), word.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (word == "unknot") {
      i = j;
      skip();
      if (i != text.size()) fail("unexpected text after `unknot`");
      return KnotDiagram::unknot();
    }
  }

  std::vector<std::array<int, 4>> tuples;
  while (i < text.size()) {
    if (text[i] != 'X' && text[i] != 'x') fail("expected `X(`");
    ++i;
    if (i == text.size() || (text[i] != '(' && text[i] != '[')) fail("expected `(` after X");
    const char close = text[i] == '(' ? ')' : ']';
    ++i;
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      const char* b = text.data() + i;
      const char* e = text.data() + text.size();
      auto [p, ec] = std::from_chars(b, e, t[k]);
      if (ec != std::errc{}) fail("expected an integer edge label");
      i += static_cast<std::size_t>(p - b);
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (k < 3) {
        if (i == text.size() || text[i] != ',') fail("expected `,`");
        ++i;
      }
    }
    if (i == text.size() || text[i] != close) fail(std::string("expected `") + close + "`");
    ++i;
    tuples.push_back(t);
    skip();
  }
  return KnotDiagram::from_pd(tuples);
}

std::vector<int> parse_braid(std::string_view text) {
  std::vector<int> word;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']') {
      ++i;
      continue;
    }
    int v = 0;
    const char* b = text.data() + i;
    auto [p, ec] = std::from_chars(b, text.data() + text.size(), v);
    if (ec != std::errc{}) throw MalformedBraid("braid " + position(text, i) + ": expected an integer");
    if (v == 0) throw MalformedBraid("braid " + position(text, i) + ": letter 0 is not a generator");
    word.push_back(v);
    i += static_cast<std::size_t>(p - b);
  }
  return word;
}

int inferred_strands(std::span<const int> word) {
  int m = 0;
  for (int l : word) m = std::max(m, std::abs(l));
  return m + 1;
}

KnotDiagram braid_to_diagram(std::span<const int> word, int strands) {
  if (strands < 1) throw MalformedBraid("strand count must be positive");
  for (int l : word)
    if (l == 0 || std::abs(l) > strands - 1)
      throw MalformedBraid("letter " + std::to_string(l) + " out of range for " + std::to_string(strands) + " strands");

  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : word) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
  int cycle = 0;
  int p = 0;
  do {
    p = perm[p];
    ++cycle;
  } while (p != 0);
  if (cycle != strands) throw NotAKnot("braid closure has more than one component");
  if (word.empty()) return KnotDiagram::unknot();

  // Strands run top to bottom; slots are listed counterclockwise, so with
  // TL/TR/BL/BR the four ends around the crossing of positions i, i+1:
  //   positive  σ_i : under TL→BR, over TR→BL   -> (TL, BL, BR, TR)
  //   negative σ_i⁻¹: under TR→BL, over TL→BR   -> (TR, TL, BL, BR)
  int next = 1;
  std::vector<int> top(strands), cur(strands);
  for (int k = 0; k < strands; ++k) top[k] = cur[k] = next++;
  std::vector<std::array<int, 4>> tuples;
  for (int l : word) {
    const int i = std::abs(l) - 1;
    const int tl = cur[i], tr = cur[i + 1];
    const int bl = next++, br = next++;
    tuples.push_back(l > 0 ? std::array<int, 4>{tl, bl, br, tr} : std::array<int, 4>{tr, tl, bl, br});
    cur[i] = bl;
    cur[i + 1] = br;
  }
  std::map<int, int> close;
  for (int k = 0; k < strands; ++k) close[cur[k]] = top[k];
  for (auto& t : tuples)
    for (int& e : t)
      if (auto it = close.find(e); it != close.end()) e = it->second;
  return KnotDiagram::from_pd(tuples);
}

FaceSet faces(const KnotDiagram& d) {
  FaceSet fs;
  if (d.empty()) {
    fs.faces.resize(2);
    return fs;
  }
  std::size_t count = 0;
  fs.around = trace_corners(d, count);
  fs.faces.resize(count);
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    for (int i = 0; i < 4; ++i) {
      // The face at corner i lies to the right of the ray out along slot i+1.
      const Slot s{c, (i + 1) & 3};
      fs.faces[fs.around[c][i]].push_back({d.edge_at(s), !d.is_outgoing(s)});
    }
  }
  if (count != d.crossing_count() + 2) throw InternalInvariantViolation("face count violates Euler's formula");
  return fs;
}

Coloring Coloring::dual() const {
  Coloring out = *this;
  for (auto& s : out.shade) s = s == Shade::white ? Shade::black : Shade::white;
  std::swap(out.white_regions, out.black_regions);
  return out;
}

std::pair<Coloring, Coloring> checkerboard(const KnotDiagram& d) {
  Coloring col;
  col.faces = faces(d);
  const std::size_t f = col.faces.size();
  std::vector<int> shade(f, -1);

  if (d.empty()) {
    shade = {0, 1};
  } else {
    std::vector<std::vector<std::size_t>> adj(f);
    for (const auto& a : col.faces.around)
      for (int i = 0; i < 4; ++i) {
        adj[a[i]].push_back(a[(i + 1) & 3]);
        adj[a[(i + 1) & 3]].push_back(a[i]);
      }
    const Slot t = d.tail(1);
    const std::size_t left_of_first = col.faces.around[t.crossing][t.slot];
    std::queue<std::size_t> q;
    shade[left_of_first] = 0;
    q.push(left_of_first);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        if (shade[v] == -1) {
          shade[v] = 1 - shade[u];
          q.push(v);
        } else if (shade[v] == shade[u]) {
          throw InternalInvariantViolation("face set admits no checkerboard coloring");
        }
      }
    }
  }

  std::vector<int> min_label(f, std::numeric_limits<int>::max());
  for (std::size_t k = 0; k < f; ++k)
    for (const auto& side : col.faces.faces[k]) min_label[k] = std::min(min_label[k], side.edge);
  std::vector<std::size_t> order(f);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return min_label[a] < min_label[b]; });

  col.shade.resize(f);
  for (std::size_t k = 0; k < f; ++k) {
    if (shade[k] == -1) throw InternalInvariantViolation("face left uncolored");
    col.shade[k] = shade[k] == 0 ? Shade::white : Shade::black;
  }
  for (std::size_t k : order) (col.shade[k] == Shade::white ? col.white_regions : col.black_regions).push_back(k);
  Coloring other = col.dual();
  return {std::move(col), std::move(other)};
}

namespace {

struct LocalClass {
  int eta;
  CrossingType type;
};

// Indexed by [white diagonal is corners {0,2}][over strand enters at slot 1].
//
// η = +1 exactly when rotating the under strand counterclockwise sweeps the
// white corners. The oriented smoothing joins corners {0,2} when the over
// strand enters at slot 1 and {1,3} otherwise; the crossing is type II when
// the joined corners are black. With slot 0 pinned to the incoming
// under-edge, these four rows cover every oriented local picture.
constexpr LocalClass kLocalTable[2][2] = {
    {{-1, CrossingType::I}, {-1, CrossingType::II}},
    {{+1, CrossingType::II}, {+1, CrossingType::I}},
};

}  // namespace

CrossingClass classify_crossings(const KnotDiagram& d, const Coloring& col) {
  CrossingClass out;
  const std::size_t n = d.crossing_count();
  out.eta.resize(n);
  out.type.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    const bool white02 = col.corner(c, 0) == Shade::white;
    const bool over_in_1 = d.over_in_slot(c) == 1;
    const LocalClass& lc = kLocalTable[white02][over_in_1];
    out.eta[c] = lc.eta;
    out.type[c] = lc.type;
  }
  return out;
}

std::int64_t correction_term(const CrossingClass& cls) {
  std::int64_t mu = 0;
  for (std::size_t c = 0; c < cls.eta.size(); ++c)
    if (cls.type[c] == CrossingType::II) mu += cls.eta[c];
  return mu;
}

namespace {

std::array<int, 4> switched(const KnotDiagram& d, std::size_t c) {
  const auto& e = d.crossings()[c].edges;
  // The old incoming over-edge becomes slot 0; rotation keeps the cyclic order.
  return d.over_in_slot(c) == 3 ? std::array<int, 4>{e[3], e[0], e[1], e[2]}
                                : std::array<int, 4>{e[1], e[2], e[3], e[0]};
}

}  // namespace

KnotDiagram switch_crossing(const KnotDiagram& d, std::size_t c) {
  if (c >= d.crossing_count()) throw MalformedPD("crossing index out of range");
  auto t = d.tuples();
  t[c] = switched(d, c);
  return KnotDiagram::from_pd(t);
}

KnotDiagram mirror(const KnotDiagram& d) {
  if (d.empty()) return d;
  std::vector<std::array<int, 4>> t;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) t.push_back(switched(d, c));
  return KnotDiagram::from_pd(t);
}

KnotDiagram reverse(const KnotDiagram& d) {
  if (d.empty()) return d;
  const int m = static_cast<int>(d.edge_count()) + 1;
  std::vector<std::array<int, 4>> t;
  for (const auto& x : d.crossings()) {
    const auto& e = x.edges;
    t.push_back({m - e[2], m - e[3], m - e[0], m - e[1]});
  }
  return KnotDiagram::from_pd(t);
}

KnotDiagram connected_sum(const KnotDiagram& a, const KnotDiagram& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const int ea = static_cast<int>(a.edge_count());
  const int eb = static_cast<int>(b.edge_count());
  auto ta = a.tuples();
  auto tb = b.tuples();
  for (auto& t : tb)
    for (int& e : t) e += ea;
  const Slot ha = a.head(ea);
  const Slot hb = b.head(eb);
  ta[ha.crossing][ha.slot] = ea + eb;
  tb[hb.crossing][hb.slot] = ea;
  ta.insert(ta.end(), tb.begin(), tb.end());
  return KnotDiagram::from_pd(ta);
}

bool is_alternating(const KnotDiagram& d) {
  const int edges = static_cast<int>(d.edge_count());
  for (int label = 1; label <= edges; ++label) {
    const bool under = d.head(label).slot == 0;
    const bool next_under = d.head(label % edges + 1).slot == 0;
    if (under == next_under) return false;
  }
  return true;
}

bool has_nugatory_crossing(const KnotDiagram& d) {
  if (d.empty()) return false;
  const FaceSet fs = faces(d);
  for (const auto& a : fs.around) {
    if (a[0] == a[2] || a[1] == a[3]) return true;
  }
  return false;
}

}  // namespace glform
