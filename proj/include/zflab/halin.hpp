#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "zflab/forcing.hpp"
#include "zflab/graph.hpp"

namespace zflab {

class DegenerateTree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotForcing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A tree with a plane embedding: the children of each vertex, listed in
// clockwise order, when the tree hangs from `root`. Vertices without an entry
// take their children in ascending order.
struct PlaneTree {
  int n = 0;
  std::vector<Edge> edges;
  std::map<Vertex, std::vector<Vertex>> children_order;
  Vertex root = 0;
};

// {"tree_edges": [[u, v], ...], "children_order": {"v": [...]}, "root": int}
PlaneTree plane_tree_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PlaneTree& t);

// Support vertices with at most one non-leaf neighbour.
std::vector<Vertex> end_support_vertices(const SimpleGraph& tree);

bool is_star(const SimpleGraph& tree);

struct HalinStructure {
  PlaneTree embedding;
  SimpleGraph tree;
  std::vector<std::vector<Vertex>> children;  // resolved embedding
  std::vector<Vertex> leaf_cycle;             // leaves in planar walk order
  std::vector<int> cycle_position;            // -1 for internal vertices
  SimpleGraph graph;
  std::vector<int> deg_prime;  // non-leaf tree neighbours (internal vertices)
  std::vector<Vertex> end_support;
  // Branching tree: internal vertices whose degree among internal vertices
  // is not 2, joined along paths of such degree-2 vertices.
  std::vector<Vertex> reduced_nodes;
  std::vector<Edge> reduced_edges;

  bool is_leaf(Vertex v) const { return cycle_position[v] >= 0; }
};

// Throws DegenerateTree for stars, non-trees, fewer than two end support
// vertices, or a resulting graph with a vertex of degree below 3.
HalinStructure build_halin(const PlaneTree& t);

struct HalinForcingSet {
  Vertex root = -1;  // end support vertex left out
  std::map<Vertex, Vertex> chosen_leaf;  // end support vertex -> its leaf
  std::vector<Vertex> set;               // ascending
  bool windows_disjoint = false;         // |set| == 3(|ES| - 1)
  ForcingCertificate certificate;
};

// For every end support vertex but the root: one of its leaves and the two
// cycle neighbours of that leaf. Leaves are picked so the triples are
// pairwise disjoint when that is possible. Verified with the engine; throws
// NotForcing if the set fails.
HalinForcingSet construct_forcing_set(const HalinStructure& hs);

struct HalinReport {
  int n = 0;
  int end_support = 0;
  int z_upper = 0;   // 3(|ES| - 1)
  int gr_lower = 0;  // n - 3(|ES| - 1)
  bool no_branching = false;  // no internal vertex with deg' >= 3
  std::optional<int> exact_z;
  std::optional<int> exact_z_loop;
  std::optional<int> exact_gr;
};

HalinReport halin_report(const HalinStructure& hs);
nlohmann::json to_json(const HalinReport& r);

// Random plane tree on `internal_size` internal vertices (a path when
// path_only), padded with leaves so every internal vertex reaches degree 3,
// under a random labelling and embedding.
HalinStructure generate_random_halin(int internal_size, std::uint64_t seed, bool path_only = false);

}  // namespace zflab
