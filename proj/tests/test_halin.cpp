#include "doctest.h"

#include "oracles.hpp"
#include "zflab/families.hpp"
#include "zflab/halin.hpp"
#include "zflab/solver.hpp"

using namespace zflab;

namespace {

PlaneTree plane_tree(int n, std::vector<Edge> edges, Vertex root = 0) {
  PlaneTree t;
  t.n = n;
  t.edges = std::move(edges);
  t.root = root;
  return t;
}

// Two adjacent centres, three leaves each.
PlaneTree spider() {
  return plane_tree(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
}

void check_shape(const HalinStructure& hs) {
  const SimpleGraph& g = hs.graph;
  const int n = g.order();
  CHECK(g.min_degree() >= 3);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (hs.tree.degree(v) == 1) leaves.push_back(v);
  }
  std::vector<Vertex> walk = hs.leaf_cycle;
  CHECK(walk.size() == leaves.size());
  std::sort(walk.begin(), walk.end());
  CHECK(walk == leaves);
  // The cycle edges are exactly the non-tree edges.
  std::set<Edge> extra;
  for (const Edge& e : g.edges()) {
    if (!hs.tree.has_edge(e.u, e.v)) extra.insert(e);
  }
  const std::size_t m = hs.leaf_cycle.size();
  std::set<Edge> cycle;
  for (std::size_t i = 0; i < m; ++i) cycle.insert(Edge(hs.leaf_cycle[i], hs.leaf_cycle[(i + 1) % m]));
  CHECK(extra == cycle);
  std::vector<Vertex> es = hs.end_support;
  std::sort(es.begin(), es.end());
  CHECK(es == oracle::end_support(hs.tree));
}

}  // namespace

TEST_CASE("end support vertices") {
  CHECK(end_support_vertices(path_graph(5)) == std::vector<Vertex>{1, 3});
  CHECK(end_support_vertices(SimpleGraph(8, spider().edges)) ==
        std::vector<Vertex>{0, 1});
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const SimpleGraph t = random_tree(3 + static_cast<int>(rng() % 12), rng);
    CHECK(end_support_vertices(t) == oracle::end_support(t));
    CHECK(is_star(t) == oracle::is_star_tree(t));
  }
}

TEST_CASE("spider with two centres") {
  const HalinStructure hs = build_halin(spider());
  check_shape(hs);
  CHECK(hs.end_support.size() == 2);
  CHECK(hs.leaf_cycle.size() == 6);
  const HalinForcingSet s = construct_forcing_set(hs);
  CHECK(s.set.size() == 3);
  CHECK(s.windows_disjoint);
  CHECK(oracle::forces(hs.graph, s.set, false));
  CHECK(oracle::forcing_number(hs.graph, false) <= 3);
  const HalinReport r = halin_report(hs);
  CHECK(r.no_branching);
  CHECK(r.z_upper == 3);
  REQUIRE(r.exact_z.has_value());
  CHECK(*r.exact_z == oracle::forcing_number(hs.graph, false));
  CHECK(*r.exact_z_loop == oracle::forcing_number(hs.graph, true));
  CHECK(*r.exact_gr == oracle::grundy(hs.graph, true));
}

TEST_CASE("caterpillar") {
  const HalinStructure hs =
      build_halin(plane_tree(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {3, 9}}));
  check_shape(hs);
  CHECK(hs.end_support.size() == 2);
  const HalinForcingSet s = construct_forcing_set(hs);
  CHECK(s.set.size() == 3);
  CHECK(certifies_forcing_set(hs.graph, s.certificate));
}

TEST_CASE("degenerate trees") {
  CHECK_THROWS_AS(build_halin(plane_tree(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})), DegenerateTree);
  CHECK_THROWS_AS(build_halin(plane_tree(4, {{0, 1}, {1, 2}, {2, 3}})), DegenerateTree);
  CHECK_THROWS_AS(build_halin(plane_tree(5, {{0, 1}, {1, 2}})), DegenerateTree);
  // An internal vertex of degree 2 leaves the result with a degree-2 vertex.
  CHECK_THROWS_AS(build_halin(plane_tree(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}})), DegenerateTree);
}

TEST_CASE("plane tree JSON") {
  const PlaneTree t = spider();
  const PlaneTree back = plane_tree_from_json(to_json(t));
  CHECK(back.n == t.n);
  CHECK(back.edges == t.edges);
  CHECK(back.root == t.root);
}

TEST_CASE("windows cannot always be disjoint") {
  // A centre with four children, two leaves each: four windows of three
  // leaves would be needed among eight leaves.
  std::vector<Edge> edges;
  int next = 5;
  for (int c = 1; c <= 4; ++c) {
    edges.emplace_back(0, c);
    edges.emplace_back(c, next++);
    edges.emplace_back(c, next++);
  }
  const HalinStructure hs = build_halin(plane_tree(13, edges));
  check_shape(hs);
  CHECK(hs.end_support.size() == 4);
  CHECK_FALSE(oracle::disjoint_windows_exist(hs.tree, hs.graph));
  const HalinForcingSet s = construct_forcing_set(hs);
  CHECK_FALSE(s.windows_disjoint);
  CHECK(s.set.size() < 9);
  CHECK(oracle::forces(hs.graph, s.set, false));
}

TEST_CASE("random Halin graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const bool path_only = seed % 4 == 0;
    const HalinStructure hs = generate_random_halin(2 + static_cast<int>(seed % 5), seed, path_only);
    check_shape(hs);
    const HalinForcingSet s = construct_forcing_set(hs);
    const int bound = 3 * (static_cast<int>(hs.end_support.size()) - 1);
    CHECK(oracle::forces(hs.graph, s.set, false));
    CHECK(certifies_forcing_set(hs.graph, s.certificate));
    if (oracle::disjoint_windows_exist(hs.tree, hs.graph)) {
      CHECK(static_cast<int>(s.set.size()) == bound);
    } else {
      CHECK(static_cast<int>(s.set.size()) < bound);
    }
    const HalinReport r = halin_report(hs);
    CHECK(r.z_upper == bound);
    CHECK(r.gr_lower == hs.graph.order() - bound);
    if (hs.graph.order() <= 16) {
      CHECK(oracle::forcing_number(hs.graph, false) <= static_cast<int>(s.set.size()));
      if (r.no_branching) {
        CHECK(oracle::forcing_number(hs.graph, false) == 3);
        CHECK(oracle::forcing_number(hs.graph, true) == 3);
      }
    }
  }
}
