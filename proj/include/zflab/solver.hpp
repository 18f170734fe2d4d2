#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "zflab/forcing.hpp"
#include "zflab/graph.hpp"

namespace zflab {

class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact searches are exponential; caps turn oversized inputs into a clean
// error instead of a hang.
struct SolverConfig {
  int forcing_cap = 20;
  int grundy_cap = 16;
  unsigned workers = 1;  // parallel workers for the subset search
};

struct ForcingResult {
  int number = 0;
  std::vector<Vertex> witness;  // lexicographically first minimum forcing set
  ForcingCertificate certificate;
};

// Z(g) for Rule::standard, Z_loop(g) for Rule::loop.
ForcingResult forcing_number(const SimpleGraph& g, Rule rule, const SolverConfig& cfg = {});

struct GrundyResult {
  int length = 0;
  VertexSequence witness;
};

// Longest legal sequence: gamma_gr for SequenceVariant::closed,
// gamma_gr^Z for SequenceVariant::z.
GrundyResult grundy_number(const SimpleGraph& g, SequenceVariant variant,
                           const SolverConfig& cfg = {});

struct InvariantReport {
  std::string graph_id;
  int n = 0;
  int z = 0;
  int z_loop = 0;
  int gr = 0;
  int gr_z = 0;
  ForcingResult z_witness;
  ForcingResult z_loop_witness;
  GrundyResult gr_witness;
  GrundyResult gr_z_witness;
  bool duality_ok = false;
};

// All four invariants by independent searches, plus the duality check
// z + gr_z = n and z_loop + gr = n.
InvariantReport check_duality(const SimpleGraph& g, const SolverConfig& cfg = {},
                              std::string graph_id = {});

// Every minimum forcing set, in lexicographic order.
std::vector<std::vector<Vertex>> enumerate_minimum_forcing_sets(const SimpleGraph& g, Rule rule,
                                                                const SolverConfig& cfg = {});

// gamma_gr(g) <= n - delta(g).
bool min_degree_bound_check(const SimpleGraph& g, const SolverConfig& cfg = {});

nlohmann::json to_json(const InvariantReport& r);

}  // namespace zflab
