#pragma once

#include <stdexcept>
#include <vector>

#include "zflab/graph.hpp"

namespace zflab {

class NoPerfectMatching : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A set of vertex-disjoint edges. For multigraph matchings, refs[i] names the
// parallel copy used by edges[i].
struct Matching {
  std::vector<Edge> edges;
  std::vector<MultiEdgeRef> refs;

  bool is_perfect(int n) const { return 2 * static_cast<int>(edges.size()) == n; }
};

// Maximum cardinality matching of a simple graph (Edmonds blossom).
std::vector<Edge> maximum_matching(const SimpleGraph& g);

// True iff no two edges share a vertex.
bool is_matching(int n, const std::vector<Edge>& edges);

// Perfect matching of h that does not use the parallel copy `avoid`.
// Requires h cubic, 2-edge-connected and of even order.
Matching perfect_matching_avoiding(const Multigraph& h, MultiEdgeRef avoid);

// A cycle of a 2-factor in a multigraph: edges[i] joins vertices[i] and
// vertices[(i + 1) % size]. A 2-cycle uses two parallel copies.
struct FactorCycle {
  std::vector<Vertex> vertices;
  std::vector<MultiEdgeRef> edges;
};

// 2-factor of h containing edge copy e: the complement of
// perfect_matching_avoiding(h, e), split into cycles. Cycles are listed by
// smallest vertex; each starts at its smallest vertex.
std::vector<FactorCycle> two_factor_containing(const Multigraph& h, MultiEdgeRef e);

}  // namespace zflab
