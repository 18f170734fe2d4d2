#include "doctest.h"

#include "oracles.hpp"
#include "zflab/cubic.hpp"
#include "zflab/families.hpp"
#include "zflab/solver.hpp"

using namespace zflab;

namespace {

bool in_family(const SimpleGraph& g) {
  return is_cubic(g) && oracle::claw_free(g) && oracle::two_edge_connected(g.order(), g.edges());
}

void check_trace(const ConstructionTrace& t) {
  const SimpleGraph& g = t.instance.graph;
  CHECK(oracle::forces(g, t.s_prime, false));
  CHECK(certifies_forcing_set(g, t.certificate));
  CHECK(static_cast<int>(t.s_prime.size()) <= cubic_bound(g.order()));
  CHECK(static_cast<int>(t.s_prime.size()) <= t.bound);
}

}  // namespace

TEST_CASE("bound formula") {
  for (int n = 4; n <= 300; n += 2) {
    const int ceil = (5 * n + 17) / 18;
    CHECK(ceil * 18 >= 5 * n);
    CHECK((ceil - 1) * 18 < 5 * n);
    CHECK(cubic_bound(n) == ceil + 1);
  }
}

TEST_CASE("synthesized graphs are claw-free cubic and 2-edge-connected") {
  const CubicInstance prism = synthesize(triangle_replaced(triple_edge()));
  CHECK(prism.graph.order() == 6);
  CHECK(in_family(prism.graph));

  const CubicInstance k4 = synthesize(triangle_replaced(k4_multigraph()));
  CHECK(k4.graph.order() == 12);
  CHECK(in_family(k4.graph));

  const Multigraph t = triple_edge();
  const CubicInstance two = synthesize(triangle_replaced(t, {{{0, 0}, 2}}));
  CHECK(two.graph.order() == 14);
  CHECK(in_family(two.graph));
  REQUIRE(two.layout.strings.at({0, 0}).size() == 2);

  for (int k = 2; k <= 6; ++k) {
    const CubicInstance r = ring_of_diamonds(k);
    CHECK(r.graph.order() == 4 * k);
    CHECK(in_family(r.graph));
  }
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const CubicDecomposition d = random_decomposition(2 + 2 * static_cast<int>(seed % 5), 0.3, 2, seed);
    const CubicInstance inst = synthesize(d, seed);
    CHECK(inst.graph.order() == d.order());
    CHECK(inst.graph.order() == 6 * d.base.order() / 2 + 4 * d.diamond_count());
    CHECK(is_cubic(inst.graph));
    CHECK(oracle::claw_free(inst.graph));
  }
}

TEST_CASE("invalid decompositions") {
  CubicDecomposition d = triangle_replaced(triple_edge());
  d.diamonds[{0, 0}] = -1;
  CHECK_THROWS_AS(validate(d), InvalidDecomposition);
  CHECK_THROWS_AS(triangle_replaced(Multigraph(2, {{0, 1, 2}})), InvalidDecomposition);
}

TEST_CASE("recognition inverts synthesis") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const CubicDecomposition d = random_decomposition(2 + 2 * static_cast<int>(seed % 6), 0.35, 3, seed);
    const CubicInstance inst = synthesize(d, seed);
    const CubicInstance back = recognize(inst.graph);
    CHECK(back.decomposition.diamond_count() == d.diamond_count());
    CHECK(back.decomposition.base.order() == d.base.order());
    CHECK(are_isomorphic(synthesize(back.decomposition).graph, inst.graph));
  }
  const CubicInstance ring = recognize(ring_of_diamonds(4).graph);
  CHECK(ring.decomposition.kind == CubicKind::ring);
  CHECK(ring.decomposition.ring_size == 4);
  CHECK(recognize(complete_graph(4)).decomposition.kind == CubicKind::k4);
}

TEST_CASE("recognition rejects graphs outside the family") {
  CHECK_THROWS_AS(recognize(petersen_graph()), NotClawFreeCubic2EC);
  CHECK_THROWS_AS(recognize(cycle_graph(6)), NotClawFreeCubic2EC);
  CHECK_THROWS_AS(recognize(cube_graph()), NotClawFreeCubic2EC);
  CHECK_THROWS_AS(construct_forcing_set(petersen_graph()), NotInScope);
}

TEST_CASE("labelling invariants") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const CubicDecomposition d = random_decomposition(4 + 2 * static_cast<int>(seed % 8), 0.25, 2, seed);
    const CubicInstance inst = synthesize(d);
    const TwoFactorLabeling lab = build_labeling(inst.decomposition, inst.layout, seed);
    CHECK(check_labeling(lab, inst.decomposition, inst.layout, inst.graph.order()).empty());
    int total = 0;
    for (const LabeledCycle& c : lab.cycles) {
      const int len = static_cast<int>(c.x.size());
      total += len;
      CHECK(len % 3 == 0);
      CHECK(len >= 6);
    }
    CHECK(total == 3 * d.base.order());
    CHECK(lab.tree_edges.size() + 1 == lab.cycles.size());
    CHECK(lab.m_prime.size() == lab.tree_edges.size());
    const SimpleGraph gp = contracted_graph(inst.decomposition, inst.layout, inst.graph.order());
    for (const Edge& e : lab.matching) CHECK(gp.has_edge(e.u, e.v));
  }
}

TEST_CASE("small constructions") {
  const ConstructionTrace k4 = construct_forcing_set(complete_graph(4));
  CHECK(k4.case_name == "k4");
  CHECK(k4.s_prime.size() == 3);

  const ConstructionTrace prism = construct_forcing_set(synthesize(triangle_replaced(triple_edge())).graph);
  CHECK(prism.case_name == "prism-n6");
  check_trace(prism);
  CHECK(prism.s_prime.size() == 3);

  const ConstructionTrace ring5 = construct_forcing_set(ring_of_diamonds(5).graph);
  CHECK(ring5.case_name == "ring");
  check_trace(ring5);
  CHECK(ring5.s_prime.size() == 7);

  // K4 base with one diamond: n = 16.
  const CubicDecomposition d = triangle_replaced(k4_multigraph(), {{{0, 0}, 1}});
  const ConstructionTrace one = construct_forcing_set(synthesize(d, 3).graph);
  CHECK(one.instance.graph.order() == 16);
  check_trace(one);
  CHECK(one.s_prime.size() <= 6);
  CHECK(oracle::forcing_number(one.instance.graph, false) <= static_cast<int>(one.s_prime.size()));

  for (int diamonds : {1, 2, 3}) {
    const CubicDecomposition e = triangle_replaced(triple_edge(), {{{0, 0}, diamonds}});
    const ConstructionTrace t = construct_forcing_set(synthesize(e).graph);
    check_trace(t);
    const int n = t.instance.graph.order();
    if (n <= 16) CHECK(forcing_number(t.instance.graph, Rule::standard).number <= static_cast<int>(t.s_prime.size()));
  }
}

TEST_CASE("ring of diamonds") {
  for (int k = 2; k <= 4; ++k) {
    const SimpleGraph g = ring_of_diamonds(k).graph;
    CHECK(forcing_number(g, Rule::standard).number == k + 2);
    CHECK(forcing_number(g, Rule::loop).number == k + 2);
  }
  for (int k = 2; k <= 30; ++k) {
    const CubicInstance r = ring_of_diamonds(k);
    const auto s = ring_forcing_set(r.layout);
    CHECK(static_cast<int>(s.size()) == k + 2);
    CHECK(oracle::forces(r.graph, s, false));
  }
}

TEST_CASE("random constructions") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const CubicDecomposition d =
        random_decomposition(2 + 2 * static_cast<int>(seed % 10), 0.2 + 0.1 * (seed % 3), 2, seed);
    const CubicInstance inst = synthesize(d, seed);
    const ConstructionTrace t = construct_forcing_set(inst.graph);
    check_trace(t);
    if (inst.graph.order() <= 16) {
      CHECK(forcing_number(inst.graph, Rule::standard).number <= static_cast<int>(t.s_prime.size()));
    }
  }
  for (int r = 1; r <= 6; ++r) {
    const ConstructionTrace t = construct_forcing_set(synthesize(triangle_replaced(necklace(r)), r).graph);
    check_trace(t);
  }
}

TEST_CASE("small claw-free cubic graphs meet the one-third bound") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const CubicDecomposition d = random_decomposition(2 + 2 * static_cast<int>(seed % 2), 0.5, 1, seed);
    const SimpleGraph g = synthesize(d, seed).graph;
    if (g.order() < 10 || g.order() > 16) continue;
    CHECK(davila_henning_check(g));
    CHECK(3 * (forcing_number(g, Rule::standard).number - 1) <= g.order());
  }
}
