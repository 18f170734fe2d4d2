#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "zflab/mop.hpp"
#include "zflab/solver.hpp"

using namespace zflab;

namespace {

// Faces of a MOP are exactly its 3-cliques.
std::vector<std::array<int, 3>> cliques(const SimpleGraph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      for (int c = b + 1; c < g.order(); ++c) {
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

bool boundary(int n, int a, int b) { return (b - a + n) % n == 1 || (a - b + n) % n == 1; }

void check_structure(const Mop& m) {
  const SimpleGraph g = m.graph();
  const int n = m.n;
  CHECK(static_cast<int>(m.chords.size()) == n - 3);
  for (std::size_t i = 0; i < m.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < m.chords.size(); ++j) CHECK_FALSE(oracle::chords_cross(m.chords[i], m.chords[j]));
  }
  const MopStructure s = analyze(m);
  const auto faces = cliques(g);
  CHECK(s.triangles.size() == faces.size());
  CHECK(static_cast<int>(s.triangles.size()) == n - 2);
  int separators = 0;
  for (const auto& f : faces) {
    separators += !boundary(n, f[0], f[1]) && !boundary(n, f[1], f[2]) && !boundary(n, f[0], f[2]);
  }
  CHECK(s.t == separators);
  int degree3 = 0;
  int dual_edges = 0;
  for (const auto& nb : s.dual) {
    degree3 += nb.size() == 3;
    dual_edges += static_cast<int>(nb.size());
  }
  CHECK(dual_edges == 2 * (n - 3));
  CHECK(s.t == degree3);
  int n2 = 0;
  for (int v = 0; v < n; ++v) n2 += g.degree(v) == 2;
  CHECK(s.n2 == n2);
  if (s.t >= 1) CHECK(s.h == s.n2);
  CHECK(s.serpentine == (s.t == 0));
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate_mop(3, {}).chords.empty());
  CHECK(analyze(validate_mop(4, {{0, 2}})).t == 0);
  try {
    validate_mop(4, {{0, 2}, {1, 3}});
    FAIL("crossing chords accepted");
  } catch (const InvalidMop& e) {
    CHECK(e.kind() == MopErrorKind::crossing_chords);
  }
  auto kind_of = [](int n, std::vector<Edge> chords) {
    try {
      validate_mop(n, std::move(chords));
    } catch (const InvalidMop& e) {
      return e.kind();
    }
    FAIL("accepted");
    return MopErrorKind::invalid_chord;
  };
  CHECK(kind_of(5, {{0, 2}}) == MopErrorKind::not_maximal);
  CHECK(kind_of(5, {{0, 1}, {0, 2}}) == MopErrorKind::invalid_chord);
  CHECK(kind_of(5, {{0, 2}, {0, 2}}) == MopErrorKind::invalid_chord);
  CHECK(kind_of(5, {{0, 7}, {0, 2}}) == MopErrorKind::invalid_chord);
  CHECK(kind_of(2, {}) == MopErrorKind::not_triangulated);
}

TEST_CASE("JSON round trip") {
  const Mop m = generate_random_mop(11, 4);
  const Mop back = mop_from_json(to_json(m));
  CHECK(back.n == m.n);
  CHECK(back.chords == m.chords);
}

TEST_CASE("serpentine shapes") {
  const MopStructure fan = analyze(serpentine_from_pattern("aaaa"));
  CHECK(fan.t == 0);
  CHECK(fan.serpentine);
  CHECK(fan.n2 == 2);

  const MopStructure snake = analyze(serpentine_from_pattern("abababab"));
  CHECK(snake.t == 0);
  int dual_leaves = 0;
  for (const auto& nb : snake.dual) dual_leaves += nb.size() == 1;
  CHECK(dual_leaves == 2);

  CHECK(generate_serpentine(1, 5).n == 3);
  const Mop f5 = serpentine_from_pattern("aaa");
  const SimpleGraph g = f5.graph();
  int apex = 0;
  for (int v = 0; v < 5; ++v) apex += g.degree(v) == 4;
  CHECK(apex == 1);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Mop m = generate_serpentine(8, seed);
    CHECK(analyze(m).t == 0);
    check_structure(m);
  }
}

TEST_CASE("random MOPs satisfy structural identities") {
  CHECK(generate_random_mop(3, 1).chords.empty());
  const Mop m10 = generate_random_mop(10, 1);
  CHECK(analyze(m10).triangles.size() == 8);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Mop m = generate_random_mop(12, seed);
    CHECK_NOTHROW(validate_mop(m.n, m.chords));
    check_structure(m);
  }
  for (std::uint64_t seed = 1; seed <= 60; ++seed) check_structure(generate_random_mop(5 + seed % 20, seed));
}

TEST_CASE("two separator triangles joined by a serpentine path") {
  const std::vector<std::pair<int, int>> chords1 = {
      {2, 27}, {2, 26}, {2, 25}, {3, 25},  {4, 25},  {4, 10},  {4, 9},  {5, 9},
      {5, 8},  {6, 8},  {25, 11}, {11, 24}, {12, 24}, {12, 23}, {23, 13}, {13, 17}, {17, 14},
      {14, 16}, {21, 19}, {21, 18}, {18, 22}, {22, 17}, {17, 23}, {10, 25}};
  std::vector<Edge> chords;
  for (const auto& [a, b] : chords1) chords.emplace_back(a - 1, b - 1);
  const Mop m = validate_mop(27, chords);
  check_structure(m);
  const MopStructure s = analyze(m);
  CHECK(s.t == 2);
  CHECK(s.c == 2);
  REQUIRE(s.paths.size() == 1);
  CHECK(s.paths[0].triangles.size() == 5);
  // The three-triangle leaf at the right end shares vertex 13 (0-based) but
  // no vertex of its separator triangle, so it is not a fan leaf.
  bool found = false;
  for (const SerpentineLeaf& leaf : s.leaves) {
    if (leaf.triangles.size() != 3) continue;
    bool all_have_13 = true;
    for (int t : leaf.triangles) {
      const Triangle& tri = s.triangles[t];
      all_have_13 &= std::find(tri.begin(), tri.end(), 13) != tri.end();
    }
    if (all_have_13) {
      found = true;
      CHECK_FALSE(leaf.fan);
    }
  }
  CHECK(found);
}

TEST_CASE("one separator triangle") {
  // Constant patterns give fan leaves; a mixed pattern of length 3 does not.
  const MopStructure fans = analyze(one_separator_mop({"aa", "b", "a"}));
  CHECK(fans.t == 1);
  CHECK(fans.h_F == 3);
  const MopStructure none = analyze(one_separator_mop({"aba", "bab", "abb"}));
  CHECK(none.t == 1);
  CHECK(none.h_F == 0);

  const Mop m = one_separator_mop({"aba", "bab", "abb"});
  const MopBounds b = bounds_report(analyze(m));
  REQUIRE(b.exact_z.has_value());
  CHECK(*b.exact_z == 4);
  CHECK(forcing_number(m.graph(), Rule::standard).number == oracle::forcing_number(m.graph(), false));
}

TEST_CASE("one separator triangle against subset enumeration") {
  const std::vector<std::array<std::string, 3>> shapes = {
      {"a", "a", "a"},    {"aa", "bb", "a"},  {"ab", "a", "a"},   {"ab", "ba", "aab"},
      {"aba", "b", "bb"}, {"abb", "bab", "a"}, {"aab", "aba", "b"}};
  for (const auto& shape : shapes) {
    const Mop m = one_separator_mop(shape);
    check_structure(m);
    const MopStructure s = analyze(m);
    CHECK(s.t == 1);
    const MopBounds b = bounds_report(s);
    REQUIRE(b.exact_z.has_value());
    REQUIRE(b.exact_z_loop.has_value());
    CHECK(*b.exact_z == (s.h_F >= 1 ? 3 : 4));
    CHECK(oracle::forcing_number(m.graph(), false) == *b.exact_z);
    CHECK(oracle::forcing_number(m.graph(), true) == *b.exact_z_loop);
    bool half = false;
    for (const BoundEntry& e : b.entries) {
      if (e.name == "half-degree-two") {
        half = e.applies;
        CHECK(e.value == (s.n2 + 1) / 2);
      }
    }
    CHECK(half);
  }
}

TEST_CASE("bounds hold against exact values") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Mop m = generate_random_mop(6 + static_cast<int>(seed % 7), seed);
    const MopBounds b = bounds_report(analyze(m));
    const int z = oracle::forcing_number(m.graph(), false);
    CHECK(z <= b.upper_z);
    if (b.lower_z) CHECK(z >= *b.lower_z);
    if (b.exact_z) CHECK(z == *b.exact_z);
    if (b.exact_z_loop) CHECK(oracle::forcing_number(m.graph(), true) == *b.exact_z_loop);
  }
}
