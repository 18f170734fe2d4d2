#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "zflab/cubic.hpp"
#include "zflab/families.hpp"
#include "zflab/io.hpp"
#include "zflab/matching.hpp"

using namespace zflab;

TEST_CASE("cubic predicate") {
  CHECK(is_cubic(complete_graph(4)));
  CHECK_FALSE(is_cubic(path_graph(3)));
  CHECK(is_cubic(ring_of_diamonds(2).graph));
  CHECK(is_cubic(triple_edge()));
  CHECK_FALSE(is_cubic(Multigraph(2, {{0, 1, 2}})));
}

TEST_CASE("claw-freeness agrees with 4-subset search") {
  CHECK_FALSE(is_claw_free(star_graph(3)));
  CHECK(is_claw_free(cycle_graph(6)));
  CHECK_FALSE(is_claw_free(petersen_graph()));
  CHECK(is_claw_free(synthesize(triangle_replaced(k4_multigraph())).graph));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const SimpleGraph g = random_connected_graph(n, 0.4, rng);
    CHECK(is_claw_free(g) == oracle::claw_free(g));
    const auto claw = find_claw(g);
    CHECK(claw.empty() == is_claw_free(g));
  }
}

TEST_CASE("two-edge-connectivity agrees with edge deletion") {
  CHECK(is_two_edge_connected(cycle_graph(4)));
  CHECK_FALSE(is_two_edge_connected(path_graph(4)));
  const SimpleGraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  CHECK_FALSE(is_two_edge_connected(two_triangles));
  CHECK(bridges(two_triangles) == std::vector<Edge>{Edge(2, 3)});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const SimpleGraph g = random_connected_graph(n, 0.25, rng);
    CHECK(is_two_edge_connected(g) == oracle::two_edge_connected(n, g.edges()));
  }
  CHECK(is_two_edge_connected(Multigraph(2, {{0, 1, 2}})));
  CHECK_FALSE(is_two_edge_connected(Multigraph(3, {{0, 1, 2}, {1, 2, 1}})));
}

TEST_CASE("maximum matching size agrees with brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const SimpleGraph g = random_connected_graph(n, 0.3, rng);
    const auto m = maximum_matching(g);
    CHECK(is_matching(n, m));
    for (const Edge& e : m) CHECK(g.has_edge(e.u, e.v));
    CHECK(static_cast<int>(m.size()) == oracle::maximum_matching_size(n, g.edges()));
  }
  CHECK(maximum_matching(petersen_graph()).size() == 5);
}

namespace {

void check_two_factor(const Multigraph& h, MultiEdgeRef e) {
  const Matching m = perfect_matching_avoiding(h, e);
  CHECK(m.is_perfect(h.order()));
  CHECK(std::find(m.refs.begin(), m.refs.end(), e) == m.refs.end());
  const auto cycles = two_factor_containing(h, e);
  std::vector<int> seen(h.order(), 0);
  std::set<MultiEdgeRef> used;
  bool has_e = false;
  int total = 0;
  for (const FactorCycle& c : cycles) {
    REQUIRE(c.vertices.size() == c.edges.size());
    total += static_cast<int>(c.vertices.size());
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      ++seen[c.vertices[i]];
      const MultiEdge& me = h.edges()[c.edges[i].pair];
      const Vertex a = c.vertices[i];
      const Vertex b = c.vertices[(i + 1) % c.vertices.size()];
      CHECK(((me.u == a && me.v == b) || (me.u == b && me.v == a)));
      CHECK(used.insert(c.edges[i]).second);
      has_e |= c.edges[i] == e;
    }
  }
  CHECK(has_e);
  CHECK(total == h.order());
  for (int s : seen) CHECK(s == 1);
  CHECK(used.size() + m.refs.size() == static_cast<std::size_t>(3 * h.order() / 2));
}

}  // namespace

TEST_CASE("perfect matching avoiding an edge and its 2-factor") {
  const Multigraph t = triple_edge();
  const Matching m = perfect_matching_avoiding(t, {0, 0});
  REQUIRE(m.refs.size() == 1);
  CHECK(m.refs[0].copy != 0);
  const auto tf = two_factor_containing(t, {0, 0});
  REQUIRE(tf.size() == 1);
  CHECK(tf[0].vertices.size() == 2);

  const Multigraph k4 = k4_multigraph();
  const Matching mk = perfect_matching_avoiding(k4, {k4.find_pair(0, 1), 0});
  std::vector<Edge> edges = mk.edges;
  std::sort(edges.begin(), edges.end());
  const bool expected = edges == std::vector<Edge>{Edge(0, 2), Edge(1, 3)} ||
                        edges == std::vector<Edge>{Edge(0, 3), Edge(1, 2)};
  CHECK(expected);
  const auto hk = two_factor_containing(k4, {k4.find_pair(0, 1), 0});
  REQUIRE(hk.size() == 1);
  CHECK(hk[0].vertices.size() == 4);

  for (const Multigraph& h : {triple_edge(), k4_multigraph(), k33_multigraph(), cube_multigraph(),
                              necklace(1), necklace(3), necklace(5)}) {
    for (int id = 0; id < static_cast<int>(h.edges().size()); ++id) {
      for (int c = 0; c < h.edges()[id].mult; ++c) check_two_factor(h, {id, c});
    }
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Multigraph h = random_cubic_multigraph(2 + 2 * static_cast<int>(rng() % 10), rng);
    for (int id = 0; id < static_cast<int>(h.edges().size()); ++id) check_two_factor(h, {id, 0});
  }
}

TEST_CASE("parse and emit") {
  const SimpleGraph k3 = parse_json_graph(R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})");
  CHECK(k3 == complete_graph(3));
  CHECK(parse_graph6("C~") == complete_graph(4));
  const std::string dot = emit_dot(complete_graph(3));
  CHECK(dot.find("graph") != std::string::npos);
  int dashes = 0;
  for (std::size_t p = dot.find("--"); p != std::string::npos; p = dot.find("--", p + 2)) ++dashes;
  CHECK(dashes == 3);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng() % 3 == 0) edges.emplace_back(a, b);
      }
    }
    const SimpleGraph g(n, edges);
    CHECK(parse_graph6(emit_graph6(g)) == g);
    CHECK(parse_json_graph(emit_json(g)) == g);
  }

  const Multigraph h(3, {{0, 1, 2}, {1, 2, 1}});
  CHECK(multigraph_from_json(to_json(h)) == h);
}

TEST_CASE("malformed input reports a position") {
  CHECK_THROWS_AS(parse_json_graph(R"({"n":3,"edges":[[0,1],[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_json_graph(R"({"n":3,"edges":[[0,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_json_graph("{\"n\":3,\n\"edges\": [[0,1],}"), ParseError);
  try {
    parse_json_graph("{\"n\":3,\n\"edges\": [[0,1],}");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS(parse_graph6("C"));
}

TEST_CASE("isomorphism") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const SimpleGraph g = random_connected_graph(8, 0.4, rng);
    std::vector<Vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(are_isomorphic(g, g.relabeled(perm)));
  }
  CHECK_FALSE(are_isomorphic(cycle_graph(6), synthesize(triangle_replaced(triple_edge())).graph));
}
