#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "zflab/cubic.hpp"
#include "zflab/families.hpp"
#include "zflab/solver.hpp"

using namespace zflab;

TEST_CASE("forcing number examples") {
  const ForcingResult p4 = forcing_number(path_graph(4), Rule::standard);
  CHECK(p4.number == 1);
  CHECK(p4.witness == std::vector<Vertex>{0});
  const ForcingResult k4 = forcing_number(complete_graph(4), Rule::standard);
  CHECK(k4.number == oracle::forcing_number(complete_graph(4), false));
  CHECK(k4.number == 3);
  const SimpleGraph ring = ring_of_diamonds(3).graph;
  CHECK(forcing_number(ring, Rule::standard).number == 5);
}

TEST_CASE("forcing number agrees with subset enumeration") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const SimpleGraph g = random_connected_graph(n, 0.35, rng);
    for (Rule rule : {Rule::standard, Rule::loop}) {
      const ForcingResult r = forcing_number(g, rule);
      CHECK(r.number == oracle::forcing_number(g, rule == Rule::loop));
      CHECK(static_cast<int>(r.witness.size()) == r.number);
      CHECK(oracle::forces(g, r.witness, rule == Rule::loop));
      CHECK(certifies_forcing_set(g, r.certificate));
    }
  }
}

TEST_CASE("Grundy numbers agree with sequence DFS") {
  CHECK(grundy_number(complete_graph(5), SequenceVariant::closed).length == 1);
  CHECK(grundy_number(path_graph(4), SequenceVariant::closed).length == 3);
  CHECK(grundy_number(ring_of_diamonds(3).graph, SequenceVariant::closed).length == 7);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const SimpleGraph g = random_connected_graph(n, 0.4, rng);
    for (bool closed : {true, false}) {
      const GrundyResult r = grundy_number(g, closed ? SequenceVariant::closed : SequenceVariant::z);
      CHECK(r.length == oracle::grundy(g, closed));
      CHECK(static_cast<int>(r.witness.seq.size()) == r.length);
      CHECK(oracle::legal_sequence(g, r.witness.seq, closed));
    }
  }
}

TEST_CASE("duality reports") {
  const InvariantReport p4 = check_duality(path_graph(4));
  CHECK(p4.z == 1);
  CHECK(p4.gr_z == 3);
  CHECK(p4.duality_ok);
  const InvariantReport k4 = check_duality(complete_graph(4));
  CHECK(k4.z == 3);
  CHECK(k4.gr_z == 1);
  CHECK(k4.z_loop == 3);
  CHECK(k4.gr == 1);
  const InvariantReport c5 = check_duality(cycle_graph(5));
  CHECK(c5.z == 2);
  CHECK(c5.gr_z == 3);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const SimpleGraph g = random_connected_graph(3 + static_cast<int>(rng() % 8), 0.4, rng);
    const InvariantReport r = check_duality(g);
    CHECK(r.duality_ok);
    CHECK(r.z_loop <= r.z);
    CHECK(r.gr_z <= r.gr);
  }
}

TEST_CASE("minimum forcing sets") {
  const auto p4 = enumerate_minimum_forcing_sets(path_graph(4), Rule::standard);
  CHECK(p4 == std::vector<std::vector<Vertex>>{{0}, {3}});
  CHECK(enumerate_minimum_forcing_sets(complete_graph(3), Rule::standard).size() == 3);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const SimpleGraph g = random_connected_graph(3 + static_cast<int>(rng() % 7), 0.4, rng);
    for (Rule rule : {Rule::standard, Rule::loop}) {
      const auto sets = enumerate_minimum_forcing_sets(g, rule);
      CHECK(sets == oracle::minimum_forcing_sets(g, rule == Rule::loop));
      if (rule == Rule::standard) {
        for (const auto& s : sets) {
          const ClosureResult c = closure(g, s, Rule::standard);
          const VertexSequence z = certificate_to_zsequence(g, c.certificate);
          CHECK(static_cast<int>(z.seq.size()) == g.order() - static_cast<int>(s.size()));
          CHECK(validate_legal_sequence(g, z).legal);
        }
      }
    }
  }
}

TEST_CASE("parallel search matches serial search") {
  std::mt19937_64 rng(47);
  SolverConfig parallel;
  parallel.workers = 3;
  for (int trial = 0; trial < 20; ++trial) {
    const SimpleGraph g = random_connected_graph(9 + static_cast<int>(rng() % 5), 0.3, rng);
    for (Rule rule : {Rule::standard, Rule::loop}) {
      const ForcingResult a = forcing_number(g, rule);
      const ForcingResult b = forcing_number(g, rule, parallel);
      CHECK(a.number == b.number);
      CHECK(a.witness == b.witness);
    }
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(grundy_number(path_graph(25), SequenceVariant::closed), SizeCapExceeded);
  CHECK_THROWS_AS(forcing_number(path_graph(25), Rule::standard), SizeCapExceeded);
  SolverConfig wide;
  wide.grundy_cap = 20;
  CHECK(grundy_number(path_graph(18), SequenceVariant::closed, wide).length == 17);
}

TEST_CASE("minimum degree bound") {
  CHECK(min_degree_bound_check(complete_graph(4)));
  CHECK(min_degree_bound_check(path_graph(4)));
  CHECK(grundy_number(cycle_graph(6), SequenceVariant::closed).length <= 4);
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const SimpleGraph g = random_connected_graph(4 + static_cast<int>(rng() % 7), 0.5, rng);
    CHECK(min_degree_bound_check(g));
    CHECK(oracle::grundy(g, true) <= g.order() - g.min_degree());
  }
}
