#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "zflab/forcing.hpp"
#include "zflab/graph.hpp"
#include "zflab/matching.hpp"

namespace zflab {

class InvalidDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotClawFreeCubic2EC : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotInScope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ConstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One end of one parallel copy of an H edge; end 0 sits at edges()[pair].u.
struct EdgeEnd {
  int pair = 0;
  int copy = 0;
  int end = 0;

  MultiEdgeRef ref() const { return {pair, copy}; }
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

enum class CubicKind { k4, ring, triangle_replaced };

struct CubicDecomposition {
  CubicKind kind = CubicKind::triangle_replaced;
  int ring_size = 0;  // diamonds in a ring
  Multigraph base;    // H
  // Diamonds on each edge copy; copies not listed carry none.
  std::map<MultiEdgeRef, int> diamonds;
  // slots[h][t]: the edge end attached to vertex t of h's triangle.
  std::vector<std::array<EdgeEnd, 3>> slots;

  int diamond_count() const;
  int order() const;  // vertices of the synthesized graph
};

// Edge ends at each vertex in (pair, copy) order.
std::vector<std::array<EdgeEnd, 3>> default_slots(const Multigraph& h);

// Throws InvalidDecomposition if H is not loopless cubic 2-edge-connected,
// the slots are not a bijection onto incident ends, or a diamond count is bad.
void validate(const CubicDecomposition& d);

CubicDecomposition triangle_replaced(Multigraph h, std::map<MultiEdgeRef, int> diamonds = {});

// Diamond u-v-w-y: u and y are the tips; v, w the interior vertices.
struct DiamondIds {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
  Vertex y = 0;
};

// Where each piece of a decomposition sits in a concrete graph.
struct CubicLayout {
  std::vector<std::array<Vertex, 3>> triangle;  // per H vertex, indexed by slot
  // Diamond strings per edge copy, ordered from end 0 to end 1; u faces end 0.
  std::map<MultiEdgeRef, std::vector<DiamondIds>> strings;
  std::vector<DiamondIds> ring;  // ring of diamonds, y_i adjacent to u_{i+1}

  std::vector<Vertex> interior_v() const;  // v of every diamond
};

struct CubicInstance {
  SimpleGraph graph;
  CubicDecomposition decomposition;
  CubicLayout layout;
};

// Builds the graph. Seed 0 keeps the canonical numbering (triangles first,
// then diamonds); other seeds apply a random relabelling.
CubicInstance synthesize(const CubicDecomposition& d, std::uint64_t seed = 0);

// Inverse of synthesize: locates diamonds, chains them into strings,
// contracts strings and triangles. The layout refers to g's own ids.
CubicInstance recognize(const SimpleGraph& g);

CubicInstance ring_of_diamonds(int k);
// {v_1, y_1, u_2, v_2} and v_i for i >= 3.
std::vector<Vertex> ring_forcing_set(const CubicLayout& layout);

// One cycle of the 2-factor of G', indexed x_1..x_n (x[0] is x_1); apexes
// sit at positions 1, 4, 7, ...
struct LabeledCycle {
  std::vector<Vertex> x;
  int parent = -1;     // label index of the parent in T, -1 at the root
  bool leaf = false;   // leaf of T
  int eta = 0;         // 1-based, 0 when undefined
};

struct TwoFactorLabeling {
  MultiEdgeRef anchor;
  std::vector<LabeledCycle> cycles;  // in label order; cycles[0] is C_1
  std::vector<Edge> matching;        // M, apex pairs of G'
  std::vector<std::pair<int, int>> j_edges;     // J on labels
  std::vector<std::pair<int, int>> tree_edges;  // T as (parent, child) labels
  // M': (vertex on parent, vertex on child) per tree edge, in tree_edges order.
  std::vector<std::pair<Vertex, Vertex>> m_prime;
  std::vector<std::vector<int>> layers;  // A_0, A_1, ... as labels
  std::map<Vertex, std::pair<int, int>> position;  // vertex -> (label, 1-based index)

  Vertex at(int label, int index) const;  // x^label_index, index taken cyclically
};

struct LabelingChoice {
  std::optional<MultiEdgeRef> anchor;  // default: pair 0, copy 0
  std::optional<int> root;             // cycle to root T at, by 2-factor order
};

// 2-factor labelling of G' = triangle replacement of H, in the vertex ids of
// `layout`. Seed 0 takes the default anchor; other seeds pick an anchor copy
// at random.
TwoFactorLabeling build_labeling(const CubicDecomposition& d, const CubicLayout& layout,
                                 std::uint64_t seed = 0);
TwoFactorLabeling build_labeling(const CubicDecomposition& d, const CubicLayout& layout,
                                 const LabelingChoice& choice);

// G' in the ids of `layout`: triangles plus one direct edge per H edge copy.
// Diamond vertices are left isolated.
SimpleGraph contracted_graph(const CubicDecomposition& d, const CubicLayout& layout, int n);

// Checks the structural invariants of a labelling; returns a description of
// the first violation, or an empty string.
std::string check_labeling(const TwoFactorLabeling& lab, const CubicDecomposition& d,
                           const CubicLayout& layout, int n);

struct ConstructionTrace {
  CubicInstance instance;
  std::optional<TwoFactorLabeling> labeling;
  std::string case_name;
  std::vector<Vertex> d_set;
  std::vector<Vertex> s_set;
  std::vector<Vertex> x_set;
  std::vector<Vertex> s_prime;
  ForcingCertificate certificate;
  int bound = 0;          // the cardinality the case promises
  int attempts = 0;       // labellings tried before one met the bound
  bool root_patched = false;  // x_1^1 added because C_1 is a 6-cycle
};

// ceil(5n/18) + 1
int cubic_bound(int n);

// Full pipeline on a 2-edge-connected claw-free cubic graph. Throws
// NotInScope when g fails the family predicates and ConstructionFailed if no
// labelling yields a verified set within the bound.
ConstructionTrace construct_forcing_set(const SimpleGraph& g);

nlohmann::json to_json(const ConstructionTrace& t);
nlohmann::json to_json(const CubicDecomposition& d);
const char* to_string(CubicKind kind);

// Exact Z(g) <= n/3 + 1 for claw-free cubic g with n >= 10.
bool davila_henning_check(const SimpleGraph& g, int forcing_cap = 20);

// Base multigraphs.
Multigraph triple_edge();
Multigraph k4_multigraph();
Multigraph k33_multigraph();
Multigraph cube_multigraph();
// r digons joined in a ring (2r vertices).
Multigraph necklace(int r);
// Uniform pairing of half-edges on `vertices` (even) vertices, rejecting
// loops and non-2-edge-connected results.
Multigraph random_cubic_multigraph(int vertices, std::mt19937_64& rng);

// Random H on `vertices` vertices with shuffled slots; each edge copy
// independently gets a string of 1..max_string diamonds with probability p.
CubicDecomposition random_decomposition(int vertices, double p, int max_string, std::uint64_t seed);

}  // namespace zflab
