#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zflab {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite simple undirected graph on vertices 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  // Throws GraphError on self-loops, out-of-range ids or repeated edges.
  SimpleGraph(int n, std::span<const Edge> edges);
  SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;

  std::vector<Edge> edges() const;
  int min_degree() const;
  int max_degree() const;
  bool is_connected() const;

  // Graph induced by relabelling vertex v to perm[v].
  SimpleGraph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  void insert_edges(std::span<const Edge> edges);

  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

// Identifies one parallel copy of a multigraph edge.
struct MultiEdgeRef {
  int pair = 0;  // index into Multigraph::edges()
  int copy = 0;  // 0 <= copy < multiplicity

  friend bool operator==(const MultiEdgeRef&, const MultiEdgeRef&) = default;
  friend auto operator<=>(const MultiEdgeRef&, const MultiEdgeRef&) = default;
};

struct MultiEdge {
  Vertex u = 0;
  Vertex v = 0;
  int mult = 1;

  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

// Loopless multigraph. Parallel edges are kept as (pair, multiplicity);
// repeated pairs in the input are merged and the pair list is sorted.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int n, std::vector<MultiEdge> edges);

  int order() const { return n_; }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  int degree(Vertex v) const { return degree_[v]; }
  int edge_count() const;
  // Pair indices incident to v, ascending.
  std::span<const int> incident(Vertex v) const { return incident_[v]; }
  Vertex other_end(int pair, Vertex v) const {
    return edges_[pair].u == v ? edges_[pair].v : edges_[pair].u;
  }
  int find_pair(Vertex a, Vertex b) const;  // -1 if absent

  // Underlying simple graph (multiplicities dropped).
  SimpleGraph underlying() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<MultiEdge> edges_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> incident_;
};

bool is_cubic(const SimpleGraph& g);
bool is_cubic(const Multigraph& h);

// No induced K_{1,3}.
bool is_claw_free(const SimpleGraph& g);
// First claw found as (center, a, b, c); empty if claw-free.
std::vector<Vertex> find_claw(const SimpleGraph& g);

// Connected and bridgeless. A pair with multiplicity >= 2 is never a bridge.
bool is_two_edge_connected(const SimpleGraph& g);
bool is_two_edge_connected(const Multigraph& h);
std::vector<Edge> bridges(const SimpleGraph& g);

// Exact isomorphism test by refinement plus backtracking; intended for
// desk-scale graphs (n up to a few dozen).
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace zflab
