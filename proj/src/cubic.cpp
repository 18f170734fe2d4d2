#include "zflab/cubic.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "zflab/families.hpp"
#include "zflab/solver.hpp"

namespace zflab {

using nlohmann::json;

const char* to_string(CubicKind kind) {
  switch (kind) {
    case CubicKind::k4:
      return "k4";
    case CubicKind::ring:
      return "ring";
    case CubicKind::triangle_replaced:
      return "triangle_replaced";
  }
  return "?";
}

int CubicDecomposition::diamond_count() const {
  if (kind == CubicKind::ring) return ring_size;
  int total = 0;
  for (const auto& [ref, count] : diamonds) total += count;
  return total;
}

int CubicDecomposition::order() const {
  switch (kind) {
    case CubicKind::k4:
      return 4;
    case CubicKind::ring:
      return 4 * ring_size;
    case CubicKind::triangle_replaced:
      return 3 * base.order() + 4 * diamond_count();
  }
  return 0;
}

std::vector<Vertex> CubicLayout::interior_v() const {
  std::vector<Vertex> out;
  for (const DiamondIds& d : ring) out.push_back(d.v);
  for (const auto& [ref, string] : strings) {
    for (const DiamondIds& d : string) out.push_back(d.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<EdgeEnd, 3>> default_slots(const Multigraph& h) {
  std::vector<std::array<EdgeEnd, 3>> out(h.order());
  for (Vertex v = 0; v < h.order(); ++v) {
    std::vector<EdgeEnd> ends;
    for (int id : h.incident(v)) {
      const MultiEdge& e = h.edges()[id];
      for (int c = 0; c < e.mult; ++c) ends.push_back({id, c, e.u == v ? 0 : 1});
    }
    if (ends.size() != 3) {
      throw InvalidDecomposition("vertex " + std::to_string(v) + " of H has degree " +
                                 std::to_string(ends.size()));
    }
    std::copy(ends.begin(), ends.end(), out[v].begin());
  }
  return out;
}

void validate(const CubicDecomposition& d) {
  if (d.kind == CubicKind::k4) return;
  if (d.kind == CubicKind::ring) {
    if (d.ring_size < 2) throw InvalidDecomposition("a ring needs at least two diamonds");
    return;
  }
  const Multigraph& h = d.base;
  if (h.order() < 2) throw InvalidDecomposition("H needs at least two vertices");
  if (!is_cubic(h)) throw InvalidDecomposition("H is not cubic");
  if (!is_two_edge_connected(h)) throw InvalidDecomposition("H is not 2-edge-connected");
  if (static_cast<int>(d.slots.size()) != h.order()) {
    throw InvalidDecomposition("slots do not cover every vertex of H");
  }
  const auto expected = default_slots(h);
  auto key = [](const EdgeEnd& e) { return std::make_tuple(e.pair, e.copy, e.end); };
  for (Vertex v = 0; v < h.order(); ++v) {
    std::array<std::tuple<int, int, int>, 3> a{};
    std::array<std::tuple<int, int, int>, 3> b{};
    for (int t = 0; t < 3; ++t) {
      a[t] = key(d.slots[v][t]);
      b[t] = key(expected[v][t]);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      throw InvalidDecomposition("slots of vertex " + std::to_string(v) +
                                 " are not its three incident edge ends");
    }
  }
  for (const auto& [ref, count] : d.diamonds) {
    if (ref.pair < 0 || ref.pair >= static_cast<int>(h.edges().size()) || ref.copy < 0 ||
        ref.copy >= h.edges()[ref.pair].mult) {
      throw InvalidDecomposition("diamonds placed on a missing edge copy");
    }
    if (count < 0) throw InvalidDecomposition("negative diamond count");
  }
}

CubicDecomposition triangle_replaced(Multigraph h, std::map<MultiEdgeRef, int> diamonds) {
  CubicDecomposition d;
  d.kind = CubicKind::triangle_replaced;
  d.slots = default_slots(h);
  d.base = std::move(h);
  d.diamonds = std::move(diamonds);
  validate(d);
  return d;
}

namespace {

void add_diamond_edges(const DiamondIds& d, std::vector<Edge>& edges) {
  edges.emplace_back(d.u, d.v);
  edges.emplace_back(d.u, d.w);
  edges.emplace_back(d.v, d.w);
  edges.emplace_back(d.v, d.y);
  edges.emplace_back(d.w, d.y);
}

DiamondIds relabel(const DiamondIds& d, const std::vector<Vertex>& perm) {
  return {perm[d.u], perm[d.v], perm[d.w], perm[d.y]};
}

// Vertex of `layout` where edge copy `ref` meets H vertex h.
Vertex attachment(const CubicDecomposition& d, const CubicLayout& layout, int h, MultiEdgeRef ref) {
  for (int t = 0; t < 3; ++t) {
    if (d.slots[h][t].ref() == ref) return layout.triangle[h][t];
  }
  throw InvalidDecomposition("edge copy not attached at vertex " + std::to_string(h));
}

}  // namespace

CubicInstance synthesize(const CubicDecomposition& d, std::uint64_t seed) {
  validate(d);
  CubicInstance out;
  out.decomposition = d;
  std::vector<Edge> edges;
  int n = 0;
  if (d.kind == CubicKind::k4) {
    n = 4;
    edges = complete_graph(4).edges();
  } else if (d.kind == CubicKind::ring) {
    const int k = d.ring_size;
    n = 4 * k;
    for (int i = 0; i < k; ++i) {
      const DiamondIds di{4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3};
      add_diamond_edges(di, edges);
      edges.emplace_back(di.y, 4 * ((i + 1) % k));
      out.layout.ring.push_back(di);
    }
  } else {
    const Multigraph& h = d.base;
    out.layout.triangle.resize(h.order());
    for (Vertex v = 0; v < h.order(); ++v) {
      for (int t = 0; t < 3; ++t) out.layout.triangle[v][t] = 3 * v + t;
      edges.emplace_back(3 * v, 3 * v + 1);
      edges.emplace_back(3 * v + 1, 3 * v + 2);
      edges.emplace_back(3 * v, 3 * v + 2);
    }
    n = 3 * h.order();
    for (int id = 0; id < static_cast<int>(h.edges().size()); ++id) {
      const MultiEdge& e = h.edges()[id];
      for (int c = 0; c < e.mult; ++c) {
        const MultiEdgeRef ref{id, c};
        Vertex prev = attachment(d, out.layout, e.u, ref);
        const Vertex last = attachment(d, out.layout, e.v, ref);
        const auto it = d.diamonds.find(ref);
        const int count = it == d.diamonds.end() ? 0 : it->second;
        for (int i = 0; i < count; ++i) {
          const DiamondIds di{n, n + 1, n + 2, n + 3};
          n += 4;
          add_diamond_edges(di, edges);
          edges.emplace_back(prev, di.u);
          prev = di.y;
          out.layout.strings[ref].push_back(di);
        }
        edges.emplace_back(prev, last);
      }
    }
  }
  out.graph = SimpleGraph(n, edges);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    out.graph = out.graph.relabeled(perm);
    for (auto& tri : out.layout.triangle) {
      for (Vertex& v : tri) v = perm[v];
    }
    for (auto& [ref, string] : out.layout.strings) {
      for (DiamondIds& di : string) di = relabel(di, perm);
    }
    for (DiamondIds& di : out.layout.ring) di = relabel(di, perm);
  }
  return out;
}

namespace {

void require_family(const SimpleGraph& g) {
  if (!g.is_connected()) throw NotClawFreeCubic2EC("graph is disconnected");
  if (!is_cubic(g)) throw NotClawFreeCubic2EC("graph is not cubic");
  if (const auto claw = find_claw(g); !claw.empty()) {
    throw NotClawFreeCubic2EC("claw centred at " + std::to_string(claw[0]) + " with leaves " +
                              std::to_string(claw[1]) + ", " + std::to_string(claw[2]) + ", " +
                              std::to_string(claw[3]));
  }
  if (!is_two_edge_connected(g)) throw NotClawFreeCubic2EC("graph has a bridge");
}

struct FoundDiamond {
  Vertex tip_a;
  Vertex tip_b;
  Vertex inner_lo;
  Vertex inner_hi;
};

// The neighbour of diamond tip t outside its diamond.
Vertex outside(const SimpleGraph& g, const FoundDiamond& d, Vertex t) {
  for (Vertex w : g.neighbors(t)) {
    if (w != d.inner_lo && w != d.inner_hi) return w;
  }
  throw std::logic_error("diamond tip without outside neighbour");
}

DiamondIds oriented(const FoundDiamond& d, Vertex entry) {
  const Vertex exit = d.tip_a == entry ? d.tip_b : d.tip_a;
  return {entry, d.inner_lo, d.inner_hi, exit};
}

}  // namespace

CubicInstance recognize(const SimpleGraph& g) {
  require_family(g);
  CubicInstance out;
  out.graph = g;
  const int n = g.order();
  if (n == 4) {
    out.decomposition.kind = CubicKind::k4;
    return out;
  }

  std::vector<FoundDiamond> diamonds;
  std::vector<int> diamond_of(n, -1);
  for (const Edge& e : g.edges()) {
    std::vector<Vertex> common;
    for (Vertex x : g.neighbors(e.u)) {
      if (x != e.v && g.has_edge(x, e.v)) common.push_back(x);
    }
    if (common.size() == 2 && !g.has_edge(common[0], common[1])) {
      const int id = static_cast<int>(diamonds.size());
      diamonds.push_back({common[0], common[1], e.u, e.v});
      for (Vertex x : {common[0], common[1], e.u, e.v}) diamond_of[x] = id;
    }
  }

  if (std::all_of(diamond_of.begin(), diamond_of.end(), [](int d) { return d >= 0; })) {
    // Ring: start at diamond 0, leave through its larger tip.
    out.decomposition.kind = CubicKind::ring;
    out.decomposition.ring_size = static_cast<int>(diamonds.size());
    Vertex entry = std::min(diamonds[0].tip_a, diamonds[0].tip_b);
    int cur = 0;
    for (std::size_t i = 0; i < diamonds.size(); ++i) {
      const DiamondIds di = oriented(diamonds[cur], entry);
      out.layout.ring.push_back(di);
      entry = outside(g, diamonds[cur], di.y);
      cur = diamond_of[entry];
    }
    if (cur != 0) throw std::logic_error("diamond ring does not close");
    return out;
  }

  // Triangles of the remaining vertices become the vertices of H.
  std::vector<int> tri_of(n, -1);
  std::vector<std::array<Vertex, 3>> tris;
  for (Vertex v = 0; v < n; ++v) {
    if (diamond_of[v] >= 0 || tri_of[v] >= 0) continue;
    std::array<Vertex, 3> t{v, -1, -1};
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size() && t[1] < 0; ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) {
          t = {v, nb[i], nb[j]};
          break;
        }
      }
    }
    if (t[1] < 0) throw NotClawFreeCubic2EC("vertex " + std::to_string(v) + " lies on no triangle");
    std::sort(t.begin(), t.end());
    for (Vertex x : t) {
      if (tri_of[x] >= 0 || diamond_of[x] >= 0) {
        throw NotClawFreeCubic2EC("triangles overlap at vertex " + std::to_string(x));
      }
      tri_of[x] = static_cast<int>(tris.size());
    }
    tris.push_back(t);
  }
  const int nh = static_cast<int>(tris.size());

  // Connections between triangle vertices, directly or through a string.
  struct Connection {
    Vertex a;
    Vertex b;
    std::vector<DiamondIds> string;  // u faces a
  };
  std::vector<Connection> conns;
  std::vector<char> done(n, 0);
  for (Vertex a = 0; a < n; ++a) {
    if (tri_of[a] < 0 || done[a]) continue;
    Vertex ext = -1;
    for (Vertex w : g.neighbors(a)) {
      if (tri_of[w] != tri_of[a]) ext = w;
    }
    Connection c{a, -1, {}};
    Vertex cur = ext;
    while (diamond_of[cur] >= 0) {
      const FoundDiamond& fd = diamonds[diamond_of[cur]];
      const DiamondIds di = oriented(fd, cur);
      c.string.push_back(di);
      cur = outside(g, fd, di.y);
    }
    c.b = cur;
    if (tri_of[c.a] == tri_of[c.b]) throw NotClawFreeCubic2EC("a string returns to its own triangle");
    done[c.a] = done[c.b] = 1;
    conns.push_back(std::move(c));
  }

  // Orient each connection from the lower H vertex, then number copies.
  for (Connection& c : conns) {
    if (tri_of[c.a] > tri_of[c.b]) {
      std::swap(c.a, c.b);
      std::reverse(c.string.begin(), c.string.end());
      for (DiamondIds& di : c.string) std::swap(di.u, di.y);
    }
  }
  std::sort(conns.begin(), conns.end(), [&](const Connection& x, const Connection& y) {
    return std::make_tuple(tri_of[x.a], tri_of[x.b], x.a, x.b) <
           std::make_tuple(tri_of[y.a], tri_of[y.b], y.a, y.b);
  });
  std::map<std::pair<int, int>, int> mult;
  for (const Connection& c : conns) ++mult[{tri_of[c.a], tri_of[c.b]}];
  std::vector<MultiEdge> hedges;
  for (const auto& [p, m] : mult) hedges.push_back({p.first, p.second, m});
  Multigraph h(nh, hedges);

  CubicDecomposition& d = out.decomposition;
  d.kind = CubicKind::triangle_replaced;
  d.slots.assign(nh, {});
  out.layout.triangle = tris;
  std::map<int, int> next_copy;
  for (const Connection& c : conns) {
    const int pair = h.find_pair(tri_of[c.a], tri_of[c.b]);
    const int copy = next_copy[pair]++;
    const MultiEdgeRef ref{pair, copy};
    for (int end = 0; end < 2; ++end) {
      const Vertex x = end == 0 ? c.a : c.b;
      const auto& t = tris[tri_of[x]];
      const int slot = static_cast<int>(std::find(t.begin(), t.end(), x) - t.begin());
      d.slots[tri_of[x]][slot] = {pair, copy, end};
    }
    if (!c.string.empty()) {
      d.diamonds[ref] = static_cast<int>(c.string.size());
      out.layout.strings[ref] = c.string;
    }
  }
  d.base = std::move(h);
  validate(d);
  return out;
}

CubicInstance ring_of_diamonds(int k) {
  CubicDecomposition d;
  d.kind = CubicKind::ring;
  d.ring_size = k;
  return synthesize(d);
}

std::vector<Vertex> ring_forcing_set(const CubicLayout& layout) {
  const auto& r = layout.ring;
  if (r.size() < 2) throw InvalidDecomposition("not a ring of diamonds");
  std::vector<Vertex> s{r[0].v, r[0].y, r[1].u, r[1].v};
  for (std::size_t i = 2; i < r.size(); ++i) s.push_back(r[i].v);
  std::sort(s.begin(), s.end());
  return s;
}

Vertex TwoFactorLabeling::at(int label, int index) const {
  const auto& x = cycles[label].x;
  const int m = static_cast<int>(x.size());
  return x[((index - 1) % m + m) % m];
}

SimpleGraph contracted_graph(const CubicDecomposition& d, const CubicLayout& layout, int n) {
  std::vector<Edge> edges;
  const Multigraph& h = d.base;
  for (const auto& t : layout.triangle) {
    edges.emplace_back(t[0], t[1]);
    edges.emplace_back(t[1], t[2]);
    edges.emplace_back(t[0], t[2]);
  }
  for (int id = 0; id < static_cast<int>(h.edges().size()); ++id) {
    const MultiEdge& e = h.edges()[id];
    for (int c = 0; c < e.mult; ++c) {
      edges.emplace_back(attachment(d, layout, e.u, {id, c}), attachment(d, layout, e.v, {id, c}));
    }
  }
  return SimpleGraph(n, edges);
}

namespace {

// Rotates/reverses a cycle so that it starts at `start`, stepping first to
// the neighbour with the smaller id.
std::vector<Vertex> reindexed(const std::vector<Vertex>& cyc, Vertex start) {
  const int m = static_cast<int>(cyc.size());
  const int p = static_cast<int>(std::find(cyc.begin(), cyc.end(), start) - cyc.begin());
  const bool forward = cyc[(p + 1) % m] < cyc[(p + m - 1) % m];
  std::vector<Vertex> out(m);
  for (int i = 0; i < m; ++i) out[i] = cyc[forward ? (p + i) % m : (p - i + m) % m];
  return out;
}

int index_in(const std::vector<Vertex>& cyc, Vertex v) {
  return static_cast<int>(std::find(cyc.begin(), cyc.end(), v) - cyc.begin()) + 1;
}

}  // namespace

TwoFactorLabeling build_labeling(const CubicDecomposition& d, const CubicLayout& layout,
                                 std::uint64_t seed) {
  LabelingChoice choice;
  if (seed != 0) {
    std::vector<MultiEdgeRef> copies;
    for (int id = 0; id < static_cast<int>(d.base.edges().size()); ++id) {
      for (int c = 0; c < d.base.edges()[id].mult; ++c) copies.push_back({id, c});
    }
    std::mt19937_64 rng(seed);
    choice.anchor = copies[rng() % copies.size()];
  }
  return build_labeling(d, layout, choice);
}

TwoFactorLabeling build_labeling(const CubicDecomposition& d, const CubicLayout& layout,
                                 const LabelingChoice& choice) {
  if (d.kind != CubicKind::triangle_replaced) {
    throw InvalidDecomposition("labelling needs a triangle-replaced decomposition");
  }
  const Multigraph& h = d.base;
  TwoFactorLabeling lab;
  lab.anchor = choice.anchor.value_or(MultiEdgeRef{0, 0});
  const auto factor = two_factor_containing(h, lab.anchor);
  const int k = static_cast<int>(factor.size());

  // Expand every H vertex of a factor cycle into t_in, apex, t_out.
  std::vector<std::vector<Vertex>> raw(k);
  std::map<Vertex, int> cycle_of;
  std::map<Vertex, Vertex> partner;  // apex -> apex across its matching edge
  for (int ci = 0; ci < k; ++ci) {
    const FactorCycle& fc = factor[ci];
    const int m = static_cast<int>(fc.vertices.size());
    std::vector<Vertex> seq;
    for (int j = 0; j < m; ++j) {
      const int hv = fc.vertices[j];
      const Vertex t_in = attachment(d, layout, hv, fc.edges[(j + m - 1) % m]);
      const Vertex t_out = attachment(d, layout, hv, fc.edges[j]);
      Vertex apex = -1;
      for (int t = 0; t < 3; ++t) {
        const Vertex x = layout.triangle[hv][t];
        if (x != t_in && x != t_out) {
          apex = x;
          const EdgeEnd& end = d.slots[hv][t];
          const MultiEdge& e = h.edges()[end.pair];
          partner[x] = attachment(d, layout, end.end == 0 ? e.v : e.u, end.ref());
        }
      }
      seq.insert(seq.end(), {t_in, apex, t_out});
    }
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    for (Vertex v : seq) cycle_of[v] = ci;
    raw[ci] = std::move(seq);
  }
  for (const auto& [a, b] : partner) {
    if (a < b) lab.matching.emplace_back(a, b);
  }

  std::vector<std::set<int>> jadj(k);
  for (const Edge& e : lab.matching) {
    const int a = cycle_of[e.u];
    const int b = cycle_of[e.v];
    if (a != b) {
      jadj[a].insert(b);
      jadj[b].insert(a);
    }
  }

  int root = 0;
  if (choice.root) {
    root = *choice.root;
    if (root < 0 || root >= k) throw std::invalid_argument("root cycle out of range");
  } else {
    // Degree rule first, then prefer a cycle of length at least 9.
    int best = -1;
    for (int ci = 0; ci < k; ++ci) {
      if (k >= 3 && jadj[ci].size() < 2) continue;
      if (best < 0 || (raw[ci].size() >= 9 && raw[best].size() < 9)) best = ci;
    }
    root = best;
  }

  // BFS tree of J; labels are BFS order.
  std::vector<int> label_of(k, -1);
  std::vector<int> order{root};
  std::vector<int> parent_cycle(k, -1);
  std::vector<int> depth(k, 0);
  label_of[root] = 0;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    const int c = order[qi];
    for (int nb : jadj[c]) {
      if (label_of[nb] >= 0) continue;
      label_of[nb] = static_cast<int>(order.size());
      parent_cycle[nb] = c;
      depth[nb] = depth[c] + 1;
      order.push_back(nb);
    }
  }
  if (static_cast<int>(order.size()) != k) throw std::logic_error("J is disconnected");

  lab.cycles.resize(k);
  for (int ci = 0; ci < k; ++ci) {
    const int l = label_of[ci];
    if (static_cast<int>(lab.layers.size()) <= depth[ci]) lab.layers.resize(depth[ci] + 1);
    lab.layers[depth[ci]].push_back(l);
    lab.cycles[l].parent = parent_cycle[ci] < 0 ? -1 : label_of[parent_cycle[ci]];
  }
  for (auto& layer : lab.layers) std::sort(layer.begin(), layer.end());
  for (int a = 0; a < k; ++a) {
    for (int b : jadj[a]) {
      if (label_of[a] < label_of[b]) lab.j_edges.emplace_back(label_of[a], label_of[b]);
    }
  }
  std::sort(lab.j_edges.begin(), lab.j_edges.end());

  // Matching edges between two cycles, as (vertex on a, vertex on b).
  auto between = [&](int ca, int cb) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Edge& e : lab.matching) {
      if (cycle_of[e.u] == ca && cycle_of[e.v] == cb) out.emplace_back(e.u, e.v);
      if (cycle_of[e.v] == ca && cycle_of[e.u] == cb) out.emplace_back(e.v, e.u);
    }
    return out;
  };

  if (k == 1) {
    Vertex first = -1;
    for (std::size_t i = 0; i < raw[root].size(); i += 3) {
      if (first < 0 || raw[root][i] < first) first = raw[root][i];
    }
    lab.cycles[0].x = reindexed(raw[root], first);
  } else {
    // Root: the M' edge to C_2 with the smallest index pair lands on x^1_1.
    const int c2 = order[1];
    std::pair<int, int> best{1 << 30, 1 << 30};
    Vertex start = -1;
    for (const auto& [a, b] : between(root, c2)) {
      const std::pair<int, int> idx{index_in(raw[root], a), index_in(raw[c2], b)};
      if (idx < best) {
        best = idx;
        start = a;
      }
    }
    lab.cycles[0].x = reindexed(raw[root], start);
  }
  for (int l = 1; l < k; ++l) {
    const int ci = order[l];
    const int pl = lab.cycles[l].parent;
    const auto& px = lab.cycles[pl].x;
    std::pair<int, int> best{1 << 30, 1 << 30};
    std::pair<Vertex, Vertex> edge{-1, -1};
    for (const auto& [a, b] : between(order[pl], ci)) {
      const std::pair<int, int> idx{index_in(px, a), index_in(raw[ci], b)};
      if (idx < best) {
        best = idx;
        edge = {a, b};
      }
    }
    lab.tree_edges.emplace_back(pl, l);
    lab.m_prime.push_back(edge);
    lab.cycles[l].x = reindexed(raw[ci], edge.second);
  }

  for (int l = 0; l < k; ++l) {
    const auto& x = lab.cycles[l].x;
    for (int i = 0; i < static_cast<int>(x.size()); ++i) lab.position[x[i]] = {l, i + 1};
  }

  std::vector<int> tree_degree(k, 0);
  for (const auto& [p, c] : lab.tree_edges) {
    ++tree_degree[p];
    ++tree_degree[c];
  }
  std::set<Vertex> child_starts;
  for (const auto& [w, v] : lab.m_prime) child_starts.insert(v);
  for (int l = 0; l < k; ++l) {
    LabeledCycle& cyc = lab.cycles[l];
    cyc.leaf = tree_degree[l] <= 1;
    for (int beta = 4; beta <= static_cast<int>(cyc.x.size()); beta += 3) {
      const Vertex other = partner.at(cyc.x[beta - 1]);
      const auto [ol, oi] = lab.position.at(other);
      const bool hit = cyc.leaf ? ol != l : (ol > l && oi == 1 && child_starts.count(other) > 0);
      if (hit) {
        cyc.eta = beta;
        break;
      }
    }
  }
  return lab;
}

std::string check_labeling(const TwoFactorLabeling& lab, const CubicDecomposition& d,
                           const CubicLayout& layout, int n) {
  const SimpleGraph gp = contracted_graph(d, layout, n);
  const int k = static_cast<int>(lab.cycles.size());
  int total = 0;
  std::set<Vertex> apexes;
  for (int l = 0; l < k; ++l) {
    const auto& x = lab.cycles[l].x;
    const int m = static_cast<int>(x.size());
    total += m;
    if (m % 3 != 0 || m < 6) return "cycle " + std::to_string(l + 1) + " has length " + std::to_string(m);
    for (int i = 0; i < m; ++i) {
      if (!gp.has_edge(x[i], x[(i + 1) % m])) return "cycle " + std::to_string(l + 1) + " is not a cycle";
    }
    for (int j = 1; j <= m; j += 3) {
      const Vertex a = lab.at(l, j - 1);
      const Vertex b = lab.at(l, j);
      const Vertex c = lab.at(l, j + 1);
      if (!gp.has_edge(a, c)) return "no triangle at apex " + std::to_string(j) + " of cycle " + std::to_string(l + 1);
      apexes.insert(b);
    }
  }
  if (total != static_cast<int>(layout.triangle.size()) * 3) return "cycles do not cover G'";
  std::set<Vertex> covered;
  for (const Edge& e : lab.matching) {
    if (!gp.has_edge(e.u, e.v)) return "matching edge missing from G'";
    if (!apexes.count(e.u) || !apexes.count(e.v)) return "matching edge off the apexes";
    if (!covered.insert(e.u).second || !covered.insert(e.v).second) return "matching is not a matching";
  }
  if (covered != apexes) return "matching is not perfect on the apexes";
  if (k >= 3) {
    int root_degree = 0;
    for (const auto& [p, c] : lab.tree_edges) root_degree += p == 0 ? 1 : 0;
    if (root_degree < 2) return "root of T has degree below 2";
  }
  std::vector<int> depth(k, 0);
  for (std::size_t i = 0; i < lab.tree_edges.size(); ++i) {
    const auto [p, c] = lab.tree_edges[i];
    if (p >= c) return "tree edge against label order";
    depth[c] = depth[p] + 1;
    const auto [w, v] = lab.m_prime[i];
    if (lab.position.at(v) != std::make_pair(c, 1)) return "M' edge does not land on x_1";
    if (lab.position.at(w).first != p) return "M' edge does not leave the parent";
    if (!gp.has_edge(w, v)) return "M' edge missing from G'";
  }
  for (int a = 1; a < k; ++a) {
    if (depth[a] < depth[a - 1]) return "labels do not follow distance from the root";
  }
  for (int l = 0; l < k; ++l) {
    const LabeledCycle& c = lab.cycles[l];
    if (k >= 2 && (c.eta <= 1 || (c.eta - 1) % 3 != 0)) {
      return "eta of cycle " + std::to_string(l + 1) + " is not an apex index above 1";
    }
  }
  return {};
}

int cubic_bound(int n) { return (5 * n + 17) / 18 + 1; }

namespace {

struct Attempt {
  std::string case_name;
  std::vector<Vertex> d_set;
  std::vector<Vertex> s_set;
  bool root_patched = false;
};

// The vertex of G next to apex x of G' along x's matching edge: the partner
// apex, or the first diamond tip of the string on that edge.
Vertex across(const CubicDecomposition& d, const CubicLayout& layout, const TwoFactorLabeling& lab,
              Vertex x) {
  for (std::size_t h = 0; h < layout.triangle.size(); ++h) {
    for (int t = 0; t < 3; ++t) {
      if (layout.triangle[h][t] != x) continue;
      const EdgeEnd& end = d.slots[h][t];
      const auto it = layout.strings.find(end.ref());
      if (it == layout.strings.end() || it->second.empty()) break;
      return end.end == 0 ? it->second.front().u : it->second.back().y;
    }
  }
  for (const Edge& e : lab.matching) {
    if (e.u == x) return e.v;
    if (e.v == x) return e.u;
  }
  throw std::logic_error("apex without matching edge");
}

Attempt sets_from_labeling(const TwoFactorLabeling& lab, const CubicDecomposition& d,
                           const CubicLayout& layout) {
  Attempt a;
  const int k = static_cast<int>(lab.cycles.size());
  auto pos = [&](Vertex v) { return lab.position.at(v); };
  if (k == 1) {
    a.case_name = "k-equals-1";
    const auto& x = lab.cycles[0].x;
    const int m = static_cast<int>(x.size());
    for (const Edge& e : lab.matching) {
      const int i = pos(e.u).second;
      const int j = pos(e.v).second;
      a.s_set.push_back(i < j ? e.u : e.v);
    }
    a.s_set.push_back(x[m - 1]);
    a.s_set.push_back(x[1]);
  } else if (std::all_of(lab.cycles.begin(), lab.cycles.end(),
                         [](const LabeledCycle& c) { return c.x.size() == 6; })) {
    a.case_name = "all-six-cycles";
    a.s_set.push_back(lab.at(0, 1));
    a.s_set.push_back(across(d, layout, lab, lab.at(0, 1)));
    for (int l = 0; l < k; ++l) a.s_set.push_back(lab.at(l, 2));
  } else {
    a.case_name = "long-cycle-general";
    for (const Edge& e : lab.matching) {
      auto [i, li] = pos(e.u);
      auto [j, sj] = pos(e.v);
      Vertex lo = e.u;
      Vertex hi = e.v;
      if (std::make_pair(i, li) > std::make_pair(j, sj)) {
        std::swap(i, j);
        std::swap(li, sj);
        std::swap(lo, hi);
      }
      const LabeledCycle& ci = lab.cycles[i];
      if (ci.x.size() < 9) continue;
      if (i < j) {
        if (li != ci.eta) a.d_set.push_back(lo);
      } else if (li < ci.eta) {
        a.d_set.push_back(lo);
      } else if (ci.eta < li) {
        a.d_set.push_back(hi);
      }
    }
    a.s_set = a.d_set;
    a.s_set.push_back(across(d, layout, lab, lab.at(0, 1)));
    for (int l = 0; l < k; ++l) a.s_set.push_back(lab.at(l, 2));
    if (lab.cycles[0].x.size() < 9) {
      a.s_set.push_back(lab.at(0, 1));
      a.root_patched = true;
    }
  }
  for (auto* s : {&a.d_set, &a.s_set}) {
    std::sort(s->begin(), s->end());
    s->erase(std::unique(s->begin(), s->end()), s->end());
  }
  return a;
}

std::vector<Vertex> merged(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<Vertex> open_neighborhood(const SimpleGraph& g, Vertex u) {
  return {g.neighbors(u).begin(), g.neighbors(u).end()};
}

}  // namespace

ConstructionTrace construct_forcing_set(const SimpleGraph& g) {
  try {
    require_family(g);
  } catch (const NotClawFreeCubic2EC& e) {
    throw NotInScope(e.what());
  }
  ConstructionTrace tr;
  tr.instance = recognize(g);
  const int n = g.order();
  const CubicDecomposition& d = tr.instance.decomposition;
  const CubicLayout& layout = tr.instance.layout;

  auto finish = [&](std::vector<Vertex> s_prime) {
    ClosureResult r = closure(g, s_prime, Rule::standard);
    if (!r.state.all_blue()) {
      throw ConstructionFailed("case " + tr.case_name + ": set of size " +
                               std::to_string(s_prime.size()) + " does not force");
    }
    tr.s_prime = std::move(s_prime);
    tr.certificate = std::move(r.certificate);
  };

  if (d.kind == CubicKind::k4) {
    tr.case_name = "k4";
    tr.bound = 3;
    tr.s_set = open_neighborhood(g, 0);
    tr.attempts = 1;
    finish(tr.s_set);
    return tr;
  }
  if (d.kind == CubicKind::ring) {
    tr.case_name = "ring";
    tr.bound = n / 4 + 2;
    tr.s_set = ring_forcing_set(layout);
    tr.attempts = 1;
    finish(tr.s_set);
    return tr;
  }

  tr.x_set = layout.interior_v();
  tr.bound = cubic_bound(n);
  if (d.base.order() == 2) {
    if (n == 6) {
      tr.case_name = "prism-n6";
      tr.bound = 3;
      tr.s_set = {layout.triangle[0].begin(), layout.triangle[0].end()};
      std::sort(tr.s_set.begin(), tr.s_set.end());
      tr.attempts = 1;
      finish(tr.s_set);
      return tr;
    }
    bool long_string = false;
    for (const auto& [ref, string] : layout.strings) long_string |= string.size() >= 2;
    if (long_string && n >= 18) {
      tr.case_name = "six-prime-with-diamonds";
      for (const auto& [ref, string] : layout.strings) {
        if (string.size() < 2) continue;
        const MultiEdge& e = d.base.edges()[ref.pair];
        for (int dir = 0; dir < 2; ++dir) {
          const int hv = dir == 0 ? e.u : e.v;
          const Vertex a = attachment(d, layout, hv, ref);
          DiamondIds d1 = dir == 0 ? string[0] : string.back();
          DiamondIds d2 = dir == 0 ? string[1] : string[string.size() - 2];
          if (dir == 1) {
            std::swap(d1.u, d1.y);
            std::swap(d2.u, d2.y);
          }
          for (Vertex x4 : layout.triangle[hv]) {
            if (x4 == a) continue;
            ++tr.attempts;
            std::vector<Vertex> s{d1.y, d2.u, x4};
            std::sort(s.begin(), s.end());
            const auto s_prime = merged(s, tr.x_set);
            if (static_cast<int>(s_prime.size()) <= tr.bound &&
                is_forcing_set(g, s_prime, Rule::standard)) {
              tr.s_set = s;
              finish(s_prime);
              return tr;
            }
          }
        }
      }
      throw ConstructionFailed("no orientation of a long string gives a forcing set");
    }
    tr.case_name = "exceptional-small";
    SolverConfig cfg;
    cfg.forcing_cap = std::max(cfg.forcing_cap, n);
    const ForcingResult z = forcing_number(g, Rule::standard, cfg);
    const int expected = n == 10 ? 4 : n == 14 ? 5 : tr.bound;
    if ((n == 10 || n == 14) ? z.number != expected : z.number > expected) {
      throw ConstructionFailed("exceptional graph on " + std::to_string(n) + " vertices has Z = " +
                               std::to_string(z.number) + ", expected " + std::to_string(expected));
    }
    tr.attempts = 1;
    tr.s_set = z.witness;
    tr.x_set.clear();
    finish(z.witness);
    return tr;
  }

  // Labelled cases: try anchors and admissible roots until one meets the bound.
  std::vector<MultiEdgeRef> anchors;
  for (int id = 0; id < static_cast<int>(d.base.edges().size()); ++id) {
    for (int c = 0; c < d.base.edges()[id].mult; ++c) anchors.push_back({id, c});
  }
  std::string last_failure = "no labelling tried";
  for (const MultiEdgeRef& anchor : anchors) {
    const TwoFactorLabeling base = build_labeling(d, layout, LabelingChoice{anchor, std::nullopt});
    const int k = static_cast<int>(base.cycles.size());
    // Admissible roots by 2-factor order: the default first, then the rest.
    std::vector<std::optional<int>> roots{std::nullopt};
    for (int ci = 0; ci < k; ++ci) roots.emplace_back(ci);
    for (const auto& root : roots) {
      TwoFactorLabeling lab;
      if (root) {
        lab = build_labeling(d, layout, LabelingChoice{anchor, root});
        if (k >= 3 && std::count_if(lab.tree_edges.begin(), lab.tree_edges.end(),
                                    [](const auto& e) { return e.first == 0; }) < 2) {
          continue;
        }
      } else {
        lab = base;
      }
      ++tr.attempts;
      Attempt a = sets_from_labeling(lab, d, layout);
      const auto s_prime = merged(a.s_set, tr.x_set);
      if (static_cast<int>(s_prime.size()) > tr.bound) {
        last_failure = a.case_name + ": |S'| = " + std::to_string(s_prime.size()) + " > " +
                       std::to_string(tr.bound);
        continue;
      }
      if (!is_forcing_set(g, s_prime, Rule::standard)) {
        last_failure = a.case_name + ": S' does not force";
        continue;
      }
      tr.case_name = a.case_name;
      tr.d_set = std::move(a.d_set);
      tr.s_set = std::move(a.s_set);
      tr.root_patched = a.root_patched;
      tr.labeling = std::move(lab);
      finish(s_prime);
      return tr;
    }
  }
  throw ConstructionFailed("after " + std::to_string(tr.attempts) + " labellings: " + last_failure);
}

json to_json(const CubicDecomposition& d) {
  json j;
  j["kind"] = to_string(d.kind);
  if (d.kind == CubicKind::ring) j["ring_size"] = d.ring_size;
  if (d.kind == CubicKind::triangle_replaced) {
    json h = json::array();
    for (const MultiEdge& e : d.base.edges()) h.push_back({e.u, e.v, e.mult});
    j["base"] = {{"n", d.base.order()}, {"edges", h}};
    json dia = json::array();
    for (const auto& [ref, count] : d.diamonds) {
      if (count > 0) dia.push_back({{"pair", ref.pair}, {"copy", ref.copy}, {"count", count}});
    }
    j["diamonds"] = dia;
  }
  return j;
}

json to_json(const ConstructionTrace& t) {
  json j;
  j["n"] = t.instance.graph.order();
  j["case"] = t.case_name;
  j["decomposition"] = to_json(t.instance.decomposition);
  j["D"] = t.d_set;
  j["S"] = t.s_set;
  j["X"] = t.x_set;
  j["S_prime"] = t.s_prime;
  j["size"] = t.s_prime.size();
  j["bound"] = t.bound;
  j["attempts"] = t.attempts;
  j["root_patched"] = t.root_patched;
  if (t.labeling) {
    const TwoFactorLabeling& lab = *t.labeling;
    json cycles = json::array();
    for (const LabeledCycle& c : lab.cycles) {
      cycles.push_back({{"x", c.x}, {"parent", c.parent}, {"leaf", c.leaf}, {"eta", c.eta}});
    }
    json m = json::array();
    for (const Edge& e : lab.matching) m.push_back({e.u, e.v});
    json mp = json::array();
    for (const auto& [w, v] : lab.m_prime) mp.push_back({w, v});
    j["labeling"] = {{"anchor", {lab.anchor.pair, lab.anchor.copy}},
                     {"cycles", cycles},
                     {"M", m},
                     {"M_prime", mp},
                     {"J", lab.j_edges},
                     {"T", lab.tree_edges},
                     {"layers", lab.layers}};
  }
  j["certificate"] = to_json(t.certificate);
  return j;
}

bool davila_henning_check(const SimpleGraph& g, int forcing_cap) {
  if (!is_cubic(g) || !is_claw_free(g)) throw NotInScope("graph is not claw-free cubic");
  if (g.order() < 10) throw NotInScope("bound applies from 10 vertices on");
  SolverConfig cfg;
  cfg.forcing_cap = forcing_cap;
  const int z = forcing_number(g, Rule::standard, cfg).number;
  return 3 * z <= g.order() + 3;
}

Multigraph triple_edge() { return Multigraph(2, {{0, 1, 3}}); }

Multigraph k4_multigraph() {
  return Multigraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}

Multigraph k33_multigraph() {
  std::vector<MultiEdge> e;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) e.push_back({a, b, 1});
  }
  return Multigraph(6, e);
}

Multigraph cube_multigraph() {
  std::vector<MultiEdge> e;
  for (const Edge& x : cube_graph().edges()) e.push_back({x.u, x.v, 1});
  return Multigraph(8, e);
}

Multigraph necklace(int r) {
  if (r < 1) throw std::invalid_argument("necklace needs at least one bead");
  std::vector<MultiEdge> e;
  for (int i = 0; i < r; ++i) {
    e.push_back({2 * i, 2 * i + 1, 2});
    e.push_back({2 * i + 1, (2 * i + 2) % (2 * r), 1});
  }
  return Multigraph(2 * r, e);
}

Multigraph random_cubic_multigraph(int vertices, std::mt19937_64& rng) {
  if (vertices < 2 || vertices % 2 != 0) throw std::invalid_argument("need an even order >= 2");
  if (vertices == 2) return triple_edge();
  std::vector<int> half(3 * vertices);
  for (int i = 0; i < 3 * vertices; ++i) half[i] = i / 3;
  while (true) {
    std::shuffle(half.begin(), half.end(), rng);
    std::vector<MultiEdge> e;
    bool loop = false;
    for (std::size_t i = 0; i < half.size(); i += 2) {
      if (half[i] == half[i + 1]) {
        loop = true;
        break;
      }
      e.push_back({half[i], half[i + 1], 1});
    }
    if (loop) continue;
    Multigraph h(vertices, e);
    if (is_two_edge_connected(h)) return h;
  }
}

CubicDecomposition random_decomposition(int vertices, double p, int max_string, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CubicDecomposition d = triangle_replaced(random_cubic_multigraph(vertices, rng));
  for (auto& s : d.slots) std::shuffle(s.begin(), s.end(), rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int id = 0; id < static_cast<int>(d.base.edges().size()); ++id) {
    for (int c = 0; c < d.base.edges()[id].mult; ++c) {
      if (max_string > 0 && coin(rng) < p) {
        d.diamonds[{id, c}] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_string));
      }
    }
  }
  validate(d);
  return d;
}

}  // namespace zflab
