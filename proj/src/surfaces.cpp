#include "glform/surfaces.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <random>
#include <sstream>

#include "glform/errors.hpp"
#include "glform/goeritz.hpp"
#include "json.hpp"

namespace glform {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::int64_t> parse_ints(const std::string& text, const std::string& where) {
  std::istringstream is(text);
  std::vector<std::int64_t> out;
  std::int64_t v = 0;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw BadMatrix("band surface: expected integers in `" + where + "`");
  return out;
}

}  // namespace

void BandSurface::add_crossings(std::size_t i, std::size_t j, const std::vector<int>& signs) {
  if (i > j) std::swap(i, j);
  auto& list = crossings[{i, j}];
  list.insert(list.end(), signs.begin(), signs.end());
}

BandSurface BandSurface::parse(std::string_view text) {
  std::vector<std::string> clauses;
  std::string cur;
  for (char ch : text) {
    if (ch == ';' || ch == '\n') {
      clauses.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  clauses.push_back(trim(cur));

  BandSurface s;
  bool have_bands = false;
  std::vector<std::pair<std::string, std::string>> pending;
  for (const auto& c : clauses) {
    if (c.empty()) continue;
    const auto colon = c.find(':');
    if (colon == std::string::npos) throw BadMatrix("band surface: missing `:` in `" + c + "`");
    const std::string head = trim(std::string_view(c).substr(0, colon));
    const std::string body = c.substr(colon + 1);
    if (head == "bands") {
      if (have_bands) throw BadMatrix("band surface: `bands` given twice");
      have_bands = true;
      for (auto m : parse_ints(body, c)) s.bands.push_back({m});
    } else if (head.rfind("cross", 0) == 0) {
      pending.emplace_back(head, body);
    } else {
      throw BadMatrix("band surface: unknown clause `" + head + "`");
    }
  }
  if (!have_bands) throw BadMatrix("band surface: no `bands` clause");

  for (const auto& [head, body] : pending) {
    std::size_t i = 0, j = 0;
    char tail = 0;
    if (std::sscanf(head.c_str(), "cross(%zu,%zu%c", &i, &j, &tail) != 3 || tail != ')')
      throw BadMatrix("band surface: expected `cross(i,j)`, got `" + head + "`");
    if (i < 1 || j < 1 || i > s.bands.size() || j > s.bands.size())
      throw BadMatrix("band surface: band index out of range in `" + head + "`");
    std::vector<int> signs;
    for (auto v : parse_ints(body, head)) {
      if (v != 1 && v != -1) throw BadMatrix("band surface: crossing signs must be ±1 in `" + head + "`");
      signs.push_back(static_cast<int>(v));
    }
    s.add_crossings(i - 1, j - 1, signs);
  }
  return s;
}

std::string BandSurface::to_string() const {
  std::ostringstream os;
  os << "bands:";
  for (const auto& b : bands) os << ' ' << b.half_twists;
  for (const auto& [key, signs] : crossings) {
    if (signs.empty()) continue;
    os << " ; cross(" << key.first + 1 << ',' << key.second + 1 << "):";
    for (int v : signs) os << ' ' << v;
  }
  return os.str();
}

SymIntMatrix linking_matrix(const BandSurface& s) {
  const std::size_t n = s.bands.size();
  SymIntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, s.bands[i].half_twists);
  for (const auto& [key, signs] : s.crossings) {
    if (key.first >= n || key.second >= n) throw BadMatrix("crossing refers to a missing band");
    std::int64_t total = 0;
    for (int v : signs) total += v;
    m.add(key.first, key.second, key.first == key.second ? 2 * total : total);
  }
  return m;
}

BandSurface black_surface_bands(const KnotDiagram& d, const Coloring& col) {
  BandSurface out;
  const std::size_t n = d.crossing_count();
  if (n == 0) return out;

  // Each crossing is an edge of the black Tait graph, directed from the black
  // face at its lower black corner to the one opposite.
  std::vector<std::size_t> from(n), to(n);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(col.faces.size());
  for (std::size_t c = 0; c < n; ++c) {
    const int b = col.corner(c, 0) == Shade::black ? 0 : 1;
    from[c] = col.faces.around[c][b];
    to[c] = col.faces.around[c][b + 2];
    adj[from[c]].push_back({to[c], c});
    adj[to[c]].push_back({from[c], c});
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  const std::size_t root = col.black_regions.front();
  std::vector<std::size_t> parent(col.faces.size(), none), via(col.faces.size(), none), depth(col.faces.size(), 0);
  std::vector<bool> seen(col.faces.size(), false), tree(n, false);
  std::queue<std::size_t> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (auto [v, c] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      parent[v] = u;
      via[v] = c;
      depth[v] = depth[u] + 1;
      tree[c] = true;
      q.push(v);
    }
  }
  for (std::size_t f : col.black_regions)
    if (!seen[f]) throw DisconnectedSurface("black regions do not form a connected surface");

  const CrossingClass cls = classify_crossings(d, col);
  std::vector<std::vector<int>> cycles;
  for (std::size_t c = 0; c < n; ++c) {
    if (tree[c]) continue;
    std::vector<int> coef(n, 0);
    coef[c] = 1;
    // Close the cycle from to[c] back to from[c] through the tree.
    std::size_t a = to[c], b = from[c];
    while (a != b) {
      if (depth[a] >= depth[b]) {
        coef[via[a]] = from[via[a]] == a ? 1 : -1;
        a = parent[a];
      } else {
        coef[via[b]] = to[via[b]] == b ? 1 : -1;
        b = parent[b];
      }
    }
    cycles.push_back(std::move(coef));
  }

  for (const auto& coef : cycles) {
    std::int64_t twists = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (coef[c]) twists += cls.eta[c];
    out.bands.push_back({twists});
  }
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    for (std::size_t l = k + 1; l < cycles.size(); ++l) {
      std::vector<int> signs;
      for (std::size_t c = 0; c < n; ++c)
        if (cycles[k][c] && cycles[l][c]) signs.push_back(cls.eta[c] * cycles[k][c] * cycles[l][c]);
      if (!signs.empty()) out.add_crossings(k, l, signs);
    }
  }
  return out;
}

std::int64_t euler_checkerboard(const KnotDiagram& d, const Coloring& col) {
  return -2 * correction_term(classify_crossings(d, col));
}

std::int64_t SurfaceState::conserved() const { return signature(glmatrix) + euler / 2; }

SurfaceState SurfaceState::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BadMatrix(std::string("surface state: ") + e.what());
  }
  if (!j.is_object() || !j.contains("matrix") || !j.contains("euler") || !j["euler"].is_number_integer())
    throw BadMatrix("surface state: expected {\"matrix\": [[...]], \"euler\": <int>}");
  SurfaceState st;
  st.glmatrix = SymIntMatrix(parse_matrix(j["matrix"].dump()));
  st.euler = j["euler"].get<std::int64_t>();
  if (st.euler % 2 != 0) throw BadMatrix("surface state: Euler number must be even");
  return st;
}

std::string SurfaceState::to_json() const {
  nlohmann::json j;
  j["matrix"] = glmatrix.to_rows();
  j["euler"] = euler;
  return j.dump();
}

SurfaceState half_twist_move(const SurfaceState& st, int sign) {
  if (sign != 1 && sign != -1) throw BadVector("half-twist sign must be ±1");
  SurfaceState out{st.glmatrix.direct_sum(SymIntMatrix{{sign}}), st.euler - 2 * sign};
  return out;
}

SurfaceState tube_move(const SurfaceState& st, const std::vector<std::int64_t>& b, std::int64_t a, int sign) {
  const std::size_t n = st.glmatrix.size();
  if (b.size() != n)
    throw BadVector("tube vector has length " + std::to_string(b.size()) + ", expected " + std::to_string(n));
  if (sign != 1 && sign != -1) throw BadVector("tube sign must be ±1");
  SymIntMatrix g = st.glmatrix.direct_sum(SymIntMatrix(2));
  for (std::size_t i = 0; i < n; ++i) g.set(i, n, b[i]);
  g.set(n, n, a);
  g.set(n, n + 1, sign);
  return {std::move(g), st.euler};
}

namespace {

// Leading principal block of size k.
SymIntMatrix leading(const SymIntMatrix& m, std::size_t k) {
  SymIntMatrix out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) out.set(i, j, m(i, j));
  return out;
}

}  // namespace

SurfaceState random_sstar_walk(const SurfaceState& st, std::size_t steps, std::uint64_t seed,
                               const WalkObserver& observer) {
  constexpr std::size_t cap = 16;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 5), coin(0, 1);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3), diag(-5, 5);

  // Blocks added by the walk, innermost last: (dimension, Euler change).
  std::vector<std::pair<std::size_t, std::int64_t>> added;
  std::size_t extra = 0;
  const std::int64_t start = st.conserved();
  SurfaceState cur = st;
  for (std::size_t step = 1; step <= steps; ++step) {
    const int r = pick(rng);
    if (!added.empty() && (extra >= cap || r < 2)) {
      const auto [dim, de] = added.back();
      added.pop_back();
      extra -= dim;
      cur = {leading(cur.glmatrix, cur.glmatrix.size() - dim), cur.euler - de};
    } else if (coin(rng)) {
      const int sign = coin(rng) ? 1 : -1;
      cur = half_twist_move(cur, sign);
      added.push_back({1, -2 * sign});
      extra += 1;
    } else {
      std::vector<std::int64_t> b(cur.glmatrix.size());
      for (auto& x : b) x = entry(rng);
      const std::int64_t a = diag(rng);
      cur = tube_move(cur, b, a, coin(rng) ? 1 : -1);
      added.push_back({2, 0});
      extra += 2;
    }
    const std::int64_t value = cur.conserved();
    if (value != start)
      throw InternalInvariantViolation("S*-walk step " + std::to_string(step) + " changed the conserved quantity from " +
                                       std::to_string(start) + " to " + std::to_string(value));
    if (observer) observer(step, cur, value);
  }
  return cur;
}

}  // namespace glform
