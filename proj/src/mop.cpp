#include "zflab/mop.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace zflab {

using nlohmann::json;

const char* to_string(MopErrorKind kind) {
  switch (kind) {
    case MopErrorKind::invalid_chord:
      return "InvalidChord";
    case MopErrorKind::crossing_chords:
      return "CrossingChords";
    case MopErrorKind::not_triangulated:
      return "NotTriangulated";
    case MopErrorKind::not_maximal:
      return "NotMaximal";
  }
  return "?";
}

bool Mop::is_boundary_edge(Vertex a, Vertex b) const {
  const Edge e(a, b);
  return e.v - e.u == 1 || (e.u == 0 && e.v == n - 1);
}

SimpleGraph Mop::graph() const {
  std::vector<Edge> all;
  if (n == 2) {
    all.emplace_back(0, 1);
  } else if (n >= 3) {
    for (Vertex i = 0; i < n; ++i) all.emplace_back(i, (i + 1) % n);
  }
  all.insert(all.end(), chords.begin(), chords.end());
  return SimpleGraph(n, all);
}

namespace {

bool crosses(const Edge& a, const Edge& b) {
  return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// Walks the faces of a validated triangulation: each sub-polygon
// p_0..p_k is split by the unique apex adjacent to both p_0 and p_k.
std::vector<Triangle> faces(const Mop& m, const SimpleGraph& g) {
  std::vector<Triangle> out;
  std::vector<std::vector<Vertex>> stack;
  std::vector<Vertex> whole(m.n);
  std::iota(whole.begin(), whole.end(), 0);
  stack.push_back(std::move(whole));
  while (!stack.empty()) {
    std::vector<Vertex> poly = std::move(stack.back());
    stack.pop_back();
    if (poly.size() < 3) continue;
    const Vertex a = poly.front();
    const Vertex c = poly.back();
    for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
      const Vertex b = poly[k];
      if (g.has_edge(a, b) && g.has_edge(b, c)) {
        Triangle t{a, b, c};
        std::sort(t.begin(), t.end());
        out.push_back(t);
        stack.emplace_back(poly.begin(), poly.begin() + static_cast<long>(k) + 1);
        stack.emplace_back(poly.begin() + static_cast<long>(k), poly.end());
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int shared_count(const Triangle& a, const Triangle& b) {
  int c = 0;
  for (Vertex x : a) c += static_cast<int>(std::count(b.begin(), b.end(), x));
  return c;
}

}  // namespace

Mop validate_mop(int n, std::vector<Edge> chords) {
  if (n < 3) {
    throw InvalidMop(MopErrorKind::not_triangulated,
                     "a polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  Mop m;
  m.n = n;
  std::sort(chords.begin(), chords.end());
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const Edge& e = chords[i];
    if (e.u < 0 || e.v >= n || e.u == e.v) {
      throw InvalidMop(MopErrorKind::invalid_chord, "chord " + edge_text(e) + " out of range");
    }
    if (m.is_boundary_edge(e.u, e.v)) {
      throw InvalidMop(MopErrorKind::invalid_chord, "chord " + edge_text(e) + " is a boundary edge");
    }
    if (i > 0 && chords[i - 1] == e) {
      throw InvalidMop(MopErrorKind::invalid_chord, "chord " + edge_text(e) + " repeated");
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (crosses(chords[i], chords[j])) {
        throw InvalidMop(MopErrorKind::crossing_chords,
                         "chords " + edge_text(chords[i]) + " and " + edge_text(chords[j]) + " cross");
      }
    }
  }
  if (static_cast<int>(chords.size()) < n - 3) {
    // Name a chord that could still be added.
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 2; b < n; ++b) {
        const Edge cand(a, b);
        if (m.is_boundary_edge(a, b) || std::binary_search(chords.begin(), chords.end(), cand)) {
          continue;
        }
        if (std::none_of(chords.begin(), chords.end(),
                         [&](const Edge& e) { return crosses(e, cand); })) {
          throw InvalidMop(MopErrorKind::not_maximal,
                           std::to_string(chords.size()) + " chords, need " + std::to_string(n - 3) +
                               "; " + edge_text(cand) + " can be added");
        }
      }
    }
  }
  m.chords = std::move(chords);
  return m;
}

json to_json(const Mop& m) {
  json chords = json::array();
  for (const Edge& e : m.chords) chords.push_back({e.u, e.v});
  return {{"n", m.n}, {"chords", chords}};
}

Mop mop_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Edge> chords;
  for (const json& e : j.at("chords")) {
    if (!e.is_array() || e.size() != 2) throw GraphError("chord must be a pair [u, v]");
    chords.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return validate_mop(n, std::move(chords));
}

MopStructure analyze(const Mop& m) {
  MopStructure s;
  const SimpleGraph g = m.graph();
  s.triangles = faces(m, g);
  const int count = static_cast<int>(s.triangles.size());

  s.dual.assign(count, {});
  std::map<Edge, std::vector<int>> by_edge;
  for (int i = 0; i < count; ++i) {
    const Triangle& t = s.triangles[i];
    for (const Edge e : {Edge(t[0], t[1]), Edge(t[1], t[2]), Edge(t[0], t[2])}) {
      by_edge[e].push_back(i);
    }
  }
  for (const auto& [e, ts] : by_edge) {
    if (ts.size() == 2) {
      s.dual[ts[0]].push_back(ts[1]);
      s.dual[ts[1]].push_back(ts[0]);
    }
  }
  for (auto& adj : s.dual) std::sort(adj.begin(), adj.end());

  std::vector<char> is_sep(count, 0);
  for (int i = 0; i < count; ++i) {
    const Triangle& t = s.triangles[i];
    if (!m.is_boundary_edge(t[0], t[1]) && !m.is_boundary_edge(t[1], t[2]) &&
        !m.is_boundary_edge(t[0], t[2])) {
      is_sep[i] = 1;
      s.separators.push_back(i);
    }
  }
  s.t = static_cast<int>(s.separators.size());
  s.serpentine = s.t == 0;
  for (Vertex v = 0; v < m.n; ++v) s.n2 += g.degree(v) == 2 ? 1 : 0;

  // Separator triangles sharing a vertex lie in the same component.
  s.component_of.assign(count, -1);
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a : s.separators) {
    for (int b : s.separators) {
      if (a < b && shared_count(s.triangles[a], s.triangles[b]) > 0) parent[find(a)] = find(b);
    }
  }
  std::map<int, int> comp_ids;
  for (int a : s.separators) {
    const auto [it, fresh] = comp_ids.emplace(find(a), static_cast<int>(comp_ids.size()));
    s.component_of[a] = it->second;
  }
  s.c = static_cast<int>(comp_ids.size());

  if (s.t == 0) return s;

  std::vector<char> in_leaf(count, 0);
  for (int start = 0; start < count; ++start) {
    if (s.dual[start].size() != 1) continue;
    SerpentineLeaf leaf;
    int prev = -1;
    int cur = start;
    while (!is_sep[cur]) {
      leaf.triangles.push_back(cur);
      in_leaf[cur] = 1;
      const int next = s.dual[cur][0] != prev ? s.dual[cur][0] : s.dual[cur][1];
      prev = cur;
      cur = next;
    }
    leaf.separator = cur;
    // Fan: one vertex of the separator triangle lies on every leaf triangle.
    const Triangle& sep = s.triangles[cur];
    leaf.fan = std::any_of(sep.begin(), sep.end(), [&](Vertex x) {
      return std::all_of(leaf.triangles.begin(), leaf.triangles.end(), [&](int ti) {
        const Triangle& t = s.triangles[ti];
        return std::find(t.begin(), t.end(), x) != t.end();
      });
    });
    s.h_F += leaf.fan ? 1 : 0;
    s.leaves.push_back(std::move(leaf));
  }
  s.h = static_cast<int>(s.leaves.size());

  std::vector<char> in_path(count, 0);
  for (int start = 0; start < count; ++start) {
    if (is_sep[start] || in_leaf[start] || in_path[start]) continue;
    // Walk to one end of the chain, then collect it in order.
    auto chain_neighbors = [&](int x) {
      std::vector<int> out;
      for (int y : s.dual[x]) {
        if (!is_sep[y]) out.push_back(y);
      }
      return out;
    };
    int end = start;
    int prev = -1;
    while (true) {
      int next = -1;
      for (int y : chain_neighbors(end)) {
        if (y != prev) next = y;
      }
      if (next < 0) break;
      prev = end;
      end = next;
    }
    SerpentinePath path;
    prev = -1;
    int cur = end;
    while (cur >= 0) {
      path.triangles.push_back(cur);
      in_path[cur] = 1;
      int next = -1;
      for (int y : chain_neighbors(cur)) {
        if (y != prev) next = y;
      }
      prev = cur;
      cur = next;
    }
    auto sep_neighbor = [&](int x, int skip) {
      for (int y : s.dual[x]) {
        if (is_sep[y] && y != skip) return y;
      }
      return -1;
    };
    path.separator_a = sep_neighbor(path.triangles.front(), -1);
    path.separator_b = sep_neighbor(path.triangles.back(),
                                    path.triangles.size() == 1 ? path.separator_a : -1);
    s.paths.push_back(std::move(path));
  }
  return s;
}

json to_json(const MopStructure& s) {
  json leaves = json::array();
  for (const SerpentineLeaf& l : s.leaves) {
    leaves.push_back({{"triangles", l.triangles}, {"separator", l.separator}, {"fan", l.fan}});
  }
  json paths = json::array();
  for (const SerpentinePath& p : s.paths) {
    paths.push_back({{"triangles", p.triangles}, {"separators", {p.separator_a, p.separator_b}}});
  }
  return {{"triangles", s.triangles}, {"separators", s.separators},
          {"t", s.t},                 {"c", s.c},
          {"h", s.h},                 {"n2", s.n2},
          {"h_F", s.h_F},             {"serpentine", s.serpentine},
          {"leaves", leaves},         {"paths", paths}};
}

MopBounds bounds_report(const MopStructure& s) {
  MopBounds b;
  auto add = [&](std::string name, std::string inv, BoundKind kind, int value, bool applies,
                 std::string pre) {
    b.entries.push_back({std::move(name), std::move(inv), kind, value, applies, std::move(pre)});
  };
  auto ceil_half = [](int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); };
  auto floor_half = [](int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };

  const bool serp = s.t == 0;
  add("serpentine", "z", BoundKind::exact, 2, serp, "t = 0");
  add("serpentine", "z_loop", BoundKind::exact, 2, serp, "t = 0");
  const int one_sep = s.h_F >= 1 ? 3 : 4;
  add("one-separator", "z", BoundKind::exact, one_sep, s.t == 1,
      s.h_F >= 1 ? "t = 1, h_F >= 1" : "t = 1, h_F = 0");
  add("one-separator", "z_loop", BoundKind::exact, one_sep, s.t == 1,
      s.h_F >= 1 ? "t = 1, h_F >= 1" : "t = 1, h_F = 0");
  if (serp) {
    b.exact_z = b.exact_z_loop = 2;
  } else if (s.t == 1) {
    b.exact_z = b.exact_z_loop = one_sep;
  }

  b.upper_z = 2 * ceil_half(s.n2 + s.c - 1);
  add("degree-two-components", "z", BoundKind::upper, b.upper_z, true, "any MOP");

  const bool half_applies = s.t >= 1 && s.c == 1;
  add("half-degree-two", "z", BoundKind::lower, ceil_half(s.n2), half_applies,
      "t >= 1 and one separator component");
  if (half_applies) b.lower_z = ceil_half(s.n2);

  // Components adjacent to exactly one serpentine path.
  std::vector<int> paths_at(s.c, 0);
  for (const SerpentinePath& p : s.paths) {
    const int ca = s.component_of[p.separator_a];
    const int cb = s.component_of[p.separator_b];
    ++paths_at[ca];
    if (cb != ca) ++paths_at[cb];
  }
  for (int k = 0; k < s.c; ++k) b.c_prime += paths_at[k] == 1 ? 1 : 0;
  for (const SerpentineLeaf& l : s.leaves) {
    b.n2_prime += paths_at[s.component_of[l.separator]] == 1 ? 1 : 0;
  }
  const int comp_lower = floor_half(b.n2_prime) - 2 * b.c_prime;
  add("path-components", "z", BoundKind::lower, comp_lower, s.t >= 1, "t >= 1");
  if (s.t >= 1) b.lower_z = std::max(b.lower_z.value_or(comp_lower), comp_lower);
  return b;
}

json to_json(const MopBounds& b) {
  json entries = json::array();
  for (const BoundEntry& e : b.entries) {
    const char* kind = e.kind == BoundKind::exact ? "exact" : e.kind == BoundKind::lower ? "lower" : "upper";
    entries.push_back({{"name", e.name},
                       {"invariant", e.invariant},
                       {"kind", kind},
                       {"value", e.value},
                       {"applies", e.applies},
                       {"precondition", e.precondition}});
  }
  json j = {{"bounds", entries}, {"upper_z", b.upper_z}, {"n2_prime", b.n2_prime}, {"c_prime", b.c_prime}};
  j["exact_z"] = b.exact_z ? json(*b.exact_z) : json(nullptr);
  j["exact_z_loop"] = b.exact_z_loop ? json(*b.exact_z_loop) : json(nullptr);
  j["lower_z"] = b.lower_z ? json(*b.lower_z) : json(nullptr);
  return j;
}

namespace {

// Triangulates the polygon poly[0..m+1] by a strip walk from the front edge
// (poly.front(), poly.back()); appends the chords it creates, excluding the
// front edge itself.
void strip(const std::vector<Vertex>& poly, std::string_view pattern, std::vector<Edge>& chords) {
  std::size_t lo = 0;
  std::size_t hi = poly.size() - 1;
  for (char step : pattern) {
    if (hi - lo < 2) break;
    if (step == 'a') {
      ++lo;
    } else if (step == 'b') {
      --hi;
    } else {
      throw std::invalid_argument(std::string("pattern letters must be 'a' or 'b', got '") + step + "'");
    }
    if (hi - lo >= 2) chords.emplace_back(poly[lo], poly[hi]);
  }
}

}  // namespace

Mop serpentine_from_pattern(std::string_view pattern) {
  if (pattern.empty()) throw std::invalid_argument("need at least one triangle");
  const int n = static_cast<int>(pattern.size()) + 2;
  std::vector<Vertex> poly(n);
  std::iota(poly.begin(), poly.end(), 0);
  std::vector<Edge> chords;
  strip(poly, pattern, chords);
  return validate_mop(n, std::move(chords));
}

Mop generate_serpentine(int triangles, std::uint64_t seed) {
  if (triangles < 1) throw std::invalid_argument("need at least one triangle");
  std::mt19937_64 rng(seed);
  std::string pattern;
  for (int i = 0; i < triangles; ++i) pattern.push_back(rng() % 2 ? 'a' : 'b');
  return serpentine_from_pattern(pattern);
}

Mop generate_random_mop(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("a MOP needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::vector<Edge> chords;
  std::vector<std::vector<Vertex>> stack;
  std::vector<Vertex> whole(n);
  std::iota(whole.begin(), whole.end(), 0);
  stack.push_back(std::move(whole));
  while (!stack.empty()) {
    std::vector<Vertex> poly = std::move(stack.back());
    stack.pop_back();
    const std::size_t len = poly.size();
    if (len <= 3) continue;
    std::uniform_int_distribution<std::size_t> pick(1, len - 2);
    const std::size_t k = pick(rng);
    if (k > 1) chords.emplace_back(poly.front(), poly[k]);
    if (k < len - 2) chords.emplace_back(poly[k], poly.back());
    stack.emplace_back(poly.begin(), poly.begin() + static_cast<long>(k) + 1);
    stack.emplace_back(poly.begin() + static_cast<long>(k), poly.end());
  }
  return validate_mop(n, std::move(chords));
}

Mop one_separator_mop(const std::array<std::string, 3>& leaf_patterns) {
  std::array<int, 3> corner{};
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    if (leaf_patterns[i].empty()) throw std::invalid_argument("every leaf needs a triangle");
    corner[i] = n;
    n += 1 + static_cast<int>(leaf_patterns[i].size());
  }
  std::vector<Edge> chords;
  for (int i = 0; i < 3; ++i) {
    const int a = corner[i];
    const int b = i == 2 ? 0 : corner[i + 1];
    chords.emplace_back(a, b);
    std::vector<Vertex> poly;
    for (int v = a; v != b; v = (v + 1) % n) poly.push_back(v);
    poly.push_back(b);
    strip(poly, leaf_patterns[i], chords);
  }
  return validate_mop(n, std::move(chords));
}

}  // namespace zflab
