#include "zflab/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace zflab {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(n);
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  insert_edges(edges);
}

SimpleGraph::SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges)
    : SimpleGraph(n) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    list.emplace_back(a, b);
  }
  insert_edges(list);
}

void SimpleGraph::insert_edges(std::span<const Edge> edges) {
  const int n = order();
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw GraphError("repeated edge in simple graph");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int SimpleGraph::min_degree() const {
  int best = order() == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool SimpleGraph::is_connected() const {
  const int n = order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const Edge& e : edges()) out.emplace_back(perm[e.u], perm[e.v]);
  return SimpleGraph(order(), out);
}

Multigraph::Multigraph(int n, std::vector<MultiEdge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  std::map<std::pair<int, int>, int> merged;
  for (const MultiEdge& e : edges) {
    if (e.u == e.v) throw GraphError("multigraph loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw GraphError("multigraph edge out of range");
    if (e.mult < 1) throw GraphError("edge multiplicity must be >= 1");
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.mult;
  }
  degree_.assign(n, 0);
  incident_.assign(n, {});
  for (const auto& [key, mult] : merged) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({key.first, key.second, mult});
    degree_[key.first] += mult;
    degree_[key.second] += mult;
    incident_[key.first].push_back(id);
    incident_[key.second].push_back(id);
  }
}

int Multigraph::edge_count() const {
  int total = 0;
  for (const auto& e : edges_) total += e.mult;
  return total;
}

int Multigraph::find_pair(Vertex a, Vertex b) const {
  for (int id : incident_[a]) {
    if (other_end(id, a) == b) return id;
  }
  return -1;
}

SimpleGraph Multigraph::underlying() const {
  std::vector<Edge> list;
  list.reserve(edges_.size());
  for (const auto& e : edges_) list.emplace_back(e.u, e.v);
  return SimpleGraph(n_, list);
}

bool is_cubic(const SimpleGraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

bool is_cubic(const Multigraph& h) {
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) != 3) return false;
  }
  return true;
}

std::vector<Vertex> find_claw(const SimpleGraph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) {
            return {c, nb[i], nb[j], nb[k]};
          }
        }
      }
    }
  }
  return {};
}

bool is_claw_free(const SimpleGraph& g) { return find_claw(g).empty(); }

namespace {

struct IndexedEdge {
  Vertex u;
  Vertex v;
};

// Bridge ids of an edge list (parallel entries are distinct edges), plus the
// number of connected components.
std::pair<std::vector<int>, int> bridge_scan(int n, const std::vector<IndexedEdge>& edges) {
  std::vector<std::vector<std::pair<Vertex, int>>> inc(n);
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    inc[edges[id].u].push_back({edges[id].v, id});
    inc[edges[id].v].push_back({edges[id].u, id});
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> found;
  int timer = 0;
  int components = 0;
  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    ++components;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < inc[f.v].size()) {
        auto [w, id] = inc[f.v][f.next++];
        if (id == f.parent_edge) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[p.v] = std::min(low[p.v], low[done.v]);
          if (low[done.v] > disc[p.v]) found.push_back(done.parent_edge);
        }
      }
    }
  }
  return {found, components};
}

}  // namespace

std::vector<Edge> bridges(const SimpleGraph& g) {
  std::vector<IndexedEdge> list;
  for (const Edge& e : g.edges()) list.push_back({e.u, e.v});
  auto [ids, comps] = bridge_scan(g.order(), list);
  std::vector<Edge> out;
  for (int id : ids) out.emplace_back(list[id].u, list[id].v);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_edge_connected(const SimpleGraph& g) {
  if (g.order() == 0) return false;
  std::vector<IndexedEdge> list;
  for (const Edge& e : g.edges()) list.push_back({e.u, e.v});
  auto [ids, comps] = bridge_scan(g.order(), list);
  return comps == 1 && ids.empty();
}

bool is_two_edge_connected(const Multigraph& h) {
  if (h.order() == 0) return false;
  std::vector<IndexedEdge> list;
  for (const auto& e : h.edges()) {
    for (int c = 0; c < e.mult; ++c) list.push_back({e.u, e.v});
  }
  auto [ids, comps] = bridge_scan(h.order(), list);
  return comps == 1 && ids.empty();
}

namespace {

// Colour refinement run on the disjoint union so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const SimpleGraph& a,
                                                             const SimpleGraph& b) {
  const int n = a.order();
  std::vector<int> ca(n), cb(n);
  for (Vertex v = 0; v < n; ++v) {
    ca[v] = a.degree(v);
    cb[v] = b.degree(v);
  }
  for (int round = 0; round < n; ++round) {
    std::map<std::vector<int>, int> palette;
    auto signature = [](const SimpleGraph& g, const std::vector<int>& c, Vertex v) {
      std::vector<int> sig{c[v]};
      for (Vertex w : g.neighbors(v)) sig.push_back(c[w]);
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<int>> sa(n), sb(n);
    for (Vertex v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      palette.emplace(sa[v], 0);
      palette.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : palette) id = next++;
    std::vector<int> na(n), nb(n);
    for (Vertex v = 0; v < n; ++v) {
      na[v] = palette[sa[v]];
      nb[v] = palette[sb[v]];
    }
    const bool stable = std::set<int>(na.begin(), na.end()).size() ==
                        std::set<int>(ca.begin(), ca.end()).size();
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return {ca, cb};
}

}  // namespace

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  if (n == 0) return true;
  auto [ca, cb] = refine_colours(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // BFS order over a; each non-root vertex remembers an earlier neighbour.
  std::vector<Vertex> order;
  std::vector<Vertex> anchor(n, -1);
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      order.push_back(v);
      for (Vertex w : a.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          anchor[w] = v;
          q.push(w);
        }
      }
    }
  }
  std::vector<Vertex> map(n, -1), used(n, 0);
  auto consistent = [&](Vertex v, Vertex image, std::size_t depth) {
    if (ca[v] != cb[image] || used[image]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex u = order[i];
      if (a.has_edge(u, v) != b.has_edge(map[u], image)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    Vertex v = order[depth];
    std::vector<Vertex> candidates;
    if (anchor[v] >= 0) {
      auto nb = b.neighbors(map[anchor[v]]);
      candidates.assign(nb.begin(), nb.end());
    } else {
      candidates.resize(n);
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (Vertex image : candidates) {
      if (!consistent(v, image, depth)) continue;
      map[v] = image;
      used[image] = 1;
      if (self(self, depth + 1)) return true;
      used[image] = 0;
      map[v] = -1;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace zflab
