#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "zflab/cubic.hpp"
#include "zflab/families.hpp"
#include "zflab/forcing.hpp"

using namespace zflab;

TEST_CASE("closure examples") {
  const ClosureResult p4 = closure(path_graph(4), std::vector<Vertex>{0}, Rule::standard);
  CHECK(p4.state.all_blue());
  CHECK(p4.certificate.steps.size() == 3);

  const ClosureResult k3 = closure(complete_graph(3), std::vector<Vertex>{0, 1}, Rule::loop);
  CHECK(k3.state.all_blue());

  const ClosureResult k3std = closure(complete_graph(3), std::vector<Vertex>{0, 1}, Rule::standard);
  CHECK(k3std.state.all_blue());

  // Degree-2 vertices of the diamond are 0 and 3.
  const ClosureResult d = closure(diamond_graph(), std::vector<Vertex>{0, 3}, Rule::standard);
  CHECK(d.state.count() == 2);
  CHECK(d.certificate.steps.empty());
}

TEST_CASE("forcing set examples") {
  for (int n = 2; n < 9; ++n) CHECK(is_forcing_set(path_graph(n), std::vector<Vertex>{0}, Rule::standard));
  CHECK_FALSE(is_forcing_set(cycle_graph(5), std::vector<Vertex>{0}, Rule::standard));
  const CubicInstance ring = ring_of_diamonds(2);
  const auto& r = ring.layout.ring;
  const std::vector<Vertex> s{r[0].v, r[0].y, r[1].u, r[1].v};
  CHECK(is_forcing_set(ring.graph, s, Rule::standard));
  CHECK(oracle::forces(ring.graph, s, false));
}

TEST_CASE("closure agrees with the sweep oracle") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const SimpleGraph g = random_connected_graph(n, 0.35, rng);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3 == 0) s.push_back(v);
    }
    for (Rule rule : {Rule::standard, Rule::loop}) {
      const ClosureResult r = closure(g, s, rule);
      CHECK(r.state.blue == oracle::closure(g, s, rule == Rule::loop));
      const ReplayResult rep = replay(g, r.certificate);
      CHECK(rep.ok);
      CHECK(rep.state.blue == r.state.blue);
    }
  }
}

TEST_CASE("monotone and loop dominates standard") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 9);
    const SimpleGraph g = random_connected_graph(n, 0.4, rng);
    std::vector<Vertex> s;
    std::vector<Vertex> t;
    for (Vertex v = 0; v < n; ++v) {
      const auto roll = rng() % 4;
      if (roll == 0) s.push_back(v);
      if (roll <= 1) t.push_back(v);
    }
    for (Rule rule : {Rule::standard, Rule::loop}) {
      if (is_forcing_set(g, s, rule)) CHECK(is_forcing_set(g, t, rule));
    }
    if (is_forcing_set(g, s, Rule::standard)) CHECK(is_forcing_set(g, s, Rule::loop));
  }
}

TEST_CASE("replay rejects illegal steps") {
  const SimpleGraph g = path_graph(4);
  ForcingCertificate bad{{0}, {{0, 1, Rule::standard}, {2, 3, Rule::standard}}};
  const ReplayResult r = replay(g, bad);
  CHECK_FALSE(r.ok);
  CHECK(r.steps_applied == 1);

  ForcingCertificate loop_only{{0, 1}, {{std::nullopt, 2, Rule::loop}}};
  CHECK(replay(complete_graph(3), loop_only).ok);
  CHECK(certifies_forcing_set(complete_graph(3), loop_only));

  ForcingCertificate early_loop{{0}, {{std::nullopt, 2, Rule::loop}}};
  CHECK_FALSE(replay(complete_graph(3), early_loop).ok);
}

TEST_CASE("certificate JSON round trip") {
  const ClosureResult r = closure(complete_graph(3), std::vector<Vertex>{0, 1}, Rule::loop);
  const auto j = to_json(r.certificate);
  const ForcingCertificate back = certificate_from_json(j);
  CHECK(back.initial == r.certificate.initial);
  CHECK(back.steps == r.certificate.steps);
  for (const auto& step : j["steps"]) {
    if (step["rule"] == "loop") CHECK(step["forcer"] == "loop");
  }
}

TEST_CASE("legal sequences") {
  const SequenceCheck k3 = validate_legal_sequence(complete_graph(3), {{0, 1}, SequenceVariant::closed});
  CHECK_FALSE(k3.legal);
  CHECK(k3.first_violation == 1u);

  const SimpleGraph p4 = path_graph(4);
  const SequenceCheck a = validate_legal_sequence(p4, {{0, 2, 3}, SequenceVariant::closed});
  CHECK(a.legal == oracle::legal_sequence(p4, {0, 2, 3}, true));
  CHECK_FALSE(a.legal);
  CHECK(a.first_violation == 2u);
  CHECK(a.footprints[0] == std::vector<Vertex>{0, 1});
  CHECK(a.footprints[1] == std::vector<Vertex>{2, 3});

  const SequenceCheck b = validate_legal_sequence(p4, {{0, 1}, SequenceVariant::z});
  CHECK(b.legal);
  CHECK(b.footprints[1] == std::vector<Vertex>{2});

  CHECK_THROWS_AS(validate_legal_sequence(p4, {{0, 0}, SequenceVariant::closed}), DuplicateVertex);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const SimpleGraph g = random_connected_graph(n, 0.4, rng);
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    seq.resize(1 + rng() % n);
    for (bool closed : {true, false}) {
      const auto v = closed ? SequenceVariant::closed : SequenceVariant::z;
      CHECK(validate_legal_sequence(g, {seq, v}).legal == oracle::legal_sequence(g, seq, closed));
    }
  }
}

TEST_CASE("certificates convert to Z-sequences") {
  const ClosureResult p4 = closure(path_graph(4), std::vector<Vertex>{0}, Rule::standard);
  const VertexSequence z = certificate_to_zsequence(path_graph(4), p4.certificate);
  CHECK(z.seq.size() == 3);
  CHECK(std::find(z.seq.begin(), z.seq.end(), 0) == z.seq.end());
  CHECK(oracle::legal_sequence(path_graph(4), z.seq, false));

  const ClosureResult k4 = closure(complete_graph(4), std::vector<Vertex>{0, 2, 3}, Rule::standard);
  CHECK(certificate_to_zsequence(complete_graph(4), k4.certificate).seq.size() == 1);

  const CubicInstance ring = ring_of_diamonds(2);
  const ClosureResult rr = closure(ring.graph, ring_forcing_set(ring.layout), Rule::standard);
  const VertexSequence rz = certificate_to_zsequence(ring.graph, rr.certificate);
  CHECK(rz.seq.size() == 4);
  CHECK(oracle::legal_sequence(ring.graph, rz.seq, false));

  const ClosureResult partial = closure(path_graph(4), std::vector<Vertex>{1}, Rule::standard);
  CHECK_THROWS_AS(certificate_to_zsequence(path_graph(4), partial.certificate), IncompleteCertificate);
}

TEST_CASE("disconnected graphs are rejected") {
  const SimpleGraph g(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(closure(g, std::vector<Vertex>{0}, Rule::standard), DisconnectedGraph);
}
