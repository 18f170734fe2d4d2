#include "zflab/matching.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <string>

namespace zflab {

std::vector<Edge> maximum_matching(const SimpleGraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const int n = g.order();
  BoostGraph bg(n);
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<Edge> out;
  const auto none = boost::graph_traits<BoostGraph>::null_vertex();
  for (int v = 0; v < n; ++v) {
    if (mate[v] != none && v < static_cast<int>(mate[v])) {
      out.emplace_back(v, static_cast<int>(mate[v]));
    }
  }
  return out;
}

bool is_matching(int n, const std::vector<Edge>& edges) {
  std::vector<char> covered(n, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) return false;
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  return true;
}

Matching perfect_matching_avoiding(const Multigraph& h, MultiEdgeRef avoid) {
  const int n = h.order();
  if (avoid.pair < 0 || avoid.pair >= static_cast<int>(h.edges().size()) || avoid.copy < 0 ||
      avoid.copy >= h.edges()[avoid.pair].mult) {
    throw NoPerfectMatching("edge copy to avoid does not exist");
  }
  if (n % 2 != 0) throw NoPerfectMatching("odd vertex count");
  if (!is_cubic(h)) throw NoPerfectMatching("multigraph is not cubic");
  if (!is_two_edge_connected(h)) throw NoPerfectMatching("multigraph is not 2-edge-connected");

  // A pair stays usable while at least one copy other than the avoided one remains.
  std::vector<Edge> usable;
  std::vector<int> pair_of;
  for (int id = 0; id < static_cast<int>(h.edges().size()); ++id) {
    const MultiEdge& e = h.edges()[id];
    const int remaining = e.mult - (id == avoid.pair ? 1 : 0);
    if (remaining >= 1) {
      usable.emplace_back(e.u, e.v);
      pair_of.push_back(id);
    }
  }
  const SimpleGraph expanded(n, usable);
  const std::vector<Edge> found = maximum_matching(expanded);
  if (static_cast<int>(found.size()) * 2 != n) {
    throw NoPerfectMatching("maximum matching has size " + std::to_string(found.size()));
  }
  Matching out;
  for (const Edge& e : found) {
    const int id = h.find_pair(e.u, e.v);
    const int copy = (id == avoid.pair && avoid.copy == 0) ? 1 : 0;
    out.edges.push_back(e);
    out.refs.push_back({id, copy});
  }
  return out;
}

std::vector<FactorCycle> two_factor_containing(const Multigraph& h, MultiEdgeRef e) {
  const Matching m = perfect_matching_avoiding(h, e);
  const auto& pairs = h.edges();
  std::vector<std::vector<char>> taken(pairs.size());
  for (std::size_t id = 0; id < pairs.size(); ++id) taken[id].assign(pairs[id].mult, 0);
  for (const MultiEdgeRef& r : m.refs) taken[r.pair][r.copy] = 1;

  // Remaining copies at v, in (pair, copy) order.
  auto remaining_at = [&](Vertex v) {
    std::vector<MultiEdgeRef> out;
    for (int id : h.incident(v)) {
      for (int c = 0; c < pairs[id].mult; ++c) {
        if (!taken[id][c]) out.push_back({id, c});
      }
    }
    return out;
  };

  std::vector<char> visited(h.order(), 0);
  std::vector<FactorCycle> cycles;
  for (Vertex start = 0; start < h.order(); ++start) {
    if (visited[start]) continue;
    FactorCycle cycle;
    Vertex v = start;
    MultiEdgeRef came{-1, -1};
    do {
      visited[v] = 1;
      cycle.vertices.push_back(v);
      const auto options = remaining_at(v);
      if (options.size() != 2) throw NoPerfectMatching("complement is not 2-regular");
      const MultiEdgeRef next = options[0] == came ? options[1] : options[0];
      cycle.edges.push_back(next);
      came = next;
      v = h.other_end(next.pair, v);
    } while (v != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace zflab
