#include "zflab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace zflab {

namespace {

using Mask = std::uint64_t;

constexpr int kMaxBits = 64;

struct BitGraph {
  int n = 0;
  std::vector<Mask> open;    // N(v)
  std::vector<Mask> closed;  // N[v]
  Mask all = 0;

  explicit BitGraph(const SimpleGraph& g) : n(g.order()), open(n), closed(n) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) open[v] |= Mask{1} << w;
      closed[v] = open[v] | (Mask{1} << v);
    }
    all = n == kMaxBits ? ~Mask{0} : (Mask{1} << n) - 1;
  }
};

Mask close_mask(const BitGraph& g, Mask blue, Rule rule) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask it = blue; it; it &= it - 1) {
      const int v = std::countr_zero(it);
      const Mask white = g.open[v] & ~blue;
      if (white != 0 && (white & (white - 1)) == 0) {
        blue |= white;
        changed = true;
      }
    }
    if (rule == Rule::loop) {
      for (Mask it = g.all & ~blue; it; it &= it - 1) {
        const int w = std::countr_zero(it);
        if ((g.open[w] & ~blue) == 0) {
          blue |= Mask{1} << w;
          changed = true;
        }
      }
    }
  }
  return blue;
}

std::vector<Vertex> to_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void check_forcing_input(const SimpleGraph& g, const SolverConfig& cfg) {
  if (g.order() > cfg.forcing_cap || g.order() > kMaxBits) {
    throw SizeCapExceeded("forcing search: n=" + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(std::min(cfg.forcing_cap, kMaxBits)));
  }
  if (!g.is_connected()) throw DisconnectedGraph("forcing search requires a connected graph");
}

// Greedy: repeatedly add the vertex whose addition blues the most vertices.
int greedy_upper_bound(const BitGraph& g, Rule rule) {
  Mask chosen = 0;
  Mask blue = close_mask(g, 0, rule);
  int size = 0;
  while (blue != g.all) {
    int best_v = -1;
    int best_count = -1;
    for (Mask it = g.all & ~blue; it; it &= it - 1) {
      const int v = std::countr_zero(it);
      const int c = std::popcount(close_mask(g, blue | (Mask{1} << v), rule));
      if (c > best_count) {
        best_count = c;
        best_v = v;
      }
    }
    chosen |= Mask{1} << best_v;
    blue = close_mask(g, blue | (Mask{1} << best_v), rule);
    ++size;
  }
  return size;
}

// Depth-first walk over k-subsets in lexicographic order. A candidate that is
// already blue under the prefix closure is skipped: the resulting set has the
// closure of a smaller set, and every smaller set is known to fail.
struct SubsetSearch {
  const BitGraph& g;
  Rule rule;
  int k;

  template <typename OnForcing>
  bool walk(int next, int depth, Mask chosen, Mask blue, OnForcing&& on_forcing) const {
    if (depth == k) return blue == g.all ? on_forcing(chosen) : false;
    for (int v = next; v <= g.n - (k - depth); ++v) {
      const Mask bit = Mask{1} << v;
      if (blue & bit) continue;
      const Mask grown = close_mask(g, blue | bit, rule);
      if (walk(v + 1, depth + 1, chosen | bit, grown, on_forcing)) return true;
    }
    return false;
  }
};

// Lexicographically first forcing set of size k, or nullopt.
std::optional<Mask> first_forcing_set(const BitGraph& g, Rule rule, int k, unsigned workers) {
  if (k == 0) {
    return close_mask(g, 0, rule) == g.all ? std::optional<Mask>(0) : std::nullopt;
  }
  const SubsetSearch search{g, rule, k};
  auto search_from = [&](int first) -> std::optional<Mask> {
    const Mask bit = Mask{1} << first;
    std::optional<Mask> found;
    search.walk(first + 1, 1, bit, close_mask(g, bit, rule), [&](Mask m) {
      found = m;
      return true;
    });
    return found;
  };
  const int last_first = g.n - k;
  if (workers <= 1) {
    for (int first = 0; first <= last_first; ++first) {
      if (auto m = search_from(first)) return m;
    }
    return std::nullopt;
  }
  // Workers claim first elements in increasing order; the smallest first
  // element that succeeds wins, so the result matches the serial walk.
  std::atomic<int> next{0};
  std::atomic<int> best_first{std::numeric_limits<int>::max()};
  std::vector<std::optional<Mask>> per_first(last_first + 1);
  auto work = [&] {
    while (true) {
      const int first = next.fetch_add(1);
      if (first > last_first || first > best_first.load()) return;
      if (auto m = search_from(first)) {
        per_first[first] = m;
        int cur = best_first.load();
        while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  const int b = best_first.load();
  if (b == std::numeric_limits<int>::max()) return std::nullopt;
  return per_first[b];
}

int forcing_lower_bound(const SimpleGraph& g) { return g.order() >= 2 ? g.min_degree() : 0; }

}  // namespace

ForcingResult forcing_number(const SimpleGraph& g, Rule rule, const SolverConfig& cfg) {
  check_forcing_input(g, cfg);
  const BitGraph bg(g);
  const int upper = greedy_upper_bound(bg, rule);
  for (int k = std::min(forcing_lower_bound(g), upper); k <= upper; ++k) {
    if (auto m = first_forcing_set(bg, rule, k, cfg.workers)) {
      ForcingResult out;
      out.number = k;
      out.witness = to_vertices(*m);
      const ClosureResult verified = closure(g, out.witness, rule);
      if (!verified.state.all_blue()) throw std::logic_error("forcing witness failed to verify");
      out.certificate = verified.certificate;
      return out;
    }
  }
  throw std::logic_error("no forcing set up to the greedy bound");
}

std::vector<std::vector<Vertex>> enumerate_minimum_forcing_sets(const SimpleGraph& g, Rule rule,
                                                                const SolverConfig& cfg) {
  const int z = forcing_number(g, rule, cfg).number;
  const BitGraph bg(g);
  std::vector<std::vector<Vertex>> out;
  if (z == 0) return {{}};
  const SubsetSearch search{bg, rule, z};
  search.walk(0, 0, 0, close_mask(bg, 0, rule), [&](Mask m) {
    out.push_back(to_vertices(m));
    return false;
  });
  for (const auto& s : out) {
    if (!is_forcing_set(g, s, rule)) throw std::logic_error("enumerated set failed to verify");
  }
  return out;
}

GrundyResult grundy_number(const SimpleGraph& g, SequenceVariant variant, const SolverConfig& cfg) {
  const int n = g.order();
  if (n > cfg.grundy_cap || n > kMaxBits) {
    throw SizeCapExceeded("Grundy search: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(std::min(cfg.grundy_cap, kMaxBits)));
  }
  if (!g.is_connected()) throw DisconnectedGraph("Grundy search requires a connected graph");
  const BitGraph bg(g);
  const auto& reach = variant == SequenceVariant::closed ? bg.closed : bg.open;

  // best(D): longest legal continuation once D is dominated. Used vertices
  // never qualify again because their closed neighbourhood lies in D.
  constexpr int kDenseBits = 24;
  std::vector<std::int8_t> dense;
  std::unordered_map<Mask, int> sparse;
  if (n <= kDenseBits) dense.assign(std::size_t{1} << n, -1);
  auto lookup = [&](Mask d) -> int {
    if (n <= kDenseBits) return dense[d];
    auto it = sparse.find(d);
    return it == sparse.end() ? -1 : it->second;
  };
  auto store = [&](Mask d, int v) {
    if (n <= kDenseBits) {
      dense[d] = static_cast<std::int8_t>(v);
    } else {
      sparse[d] = v;
    }
  };
  auto best = [&](auto&& self, Mask d) -> int {
    if (const int cached = lookup(d); cached >= 0) return cached;
    int result = 0;
    for (int x = 0; x < n; ++x) {
      if ((reach[x] & ~d) == 0) continue;
      result = std::max(result, 1 + self(self, d | bg.closed[x]));
    }
    store(d, result);
    return result;
  };

  GrundyResult out;
  out.length = best(best, 0);
  out.witness.variant = variant;
  Mask d = 0;
  for (int remaining = out.length; remaining > 0; --remaining) {
    for (int x = 0; x < n; ++x) {
      if ((reach[x] & ~d) == 0) continue;
      if (1 + best(best, d | bg.closed[x]) == remaining) {
        out.witness.seq.push_back(x);
        d |= bg.closed[x];
        break;
      }
    }
  }
  if (!validate_legal_sequence(g, out.witness).legal ||
      static_cast<int>(out.witness.seq.size()) != out.length) {
    throw std::logic_error("Grundy witness failed to validate");
  }
  return out;
}

InvariantReport check_duality(const SimpleGraph& g, const SolverConfig& cfg, std::string graph_id) {
  InvariantReport r;
  r.graph_id = std::move(graph_id);
  r.n = g.order();
  r.z_witness = forcing_number(g, Rule::standard, cfg);
  r.z_loop_witness = forcing_number(g, Rule::loop, cfg);
  r.gr_witness = grundy_number(g, SequenceVariant::closed, cfg);
  r.gr_z_witness = grundy_number(g, SequenceVariant::z, cfg);
  r.z = r.z_witness.number;
  r.z_loop = r.z_loop_witness.number;
  r.gr = r.gr_witness.length;
  r.gr_z = r.gr_z_witness.length;
  r.duality_ok = (r.z + r.gr_z == r.n) && (r.z_loop + r.gr == r.n);
  return r;
}

bool min_degree_bound_check(const SimpleGraph& g, const SolverConfig& cfg) {
  return grundy_number(g, SequenceVariant::closed, cfg).length <= g.order() - g.min_degree();
}

nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json j;
  if (!r.graph_id.empty()) j["graph"] = r.graph_id;
  j["n"] = r.n;
  j["z"] = r.z;
  j["z_loop"] = r.z_loop;
  j["gr"] = r.gr;
  j["gr_z"] = r.gr_z;
  j["witnesses"] = {{"z", r.z_witness.witness},
                    {"z_loop", r.z_loop_witness.witness},
                    {"gr", r.gr_witness.witness.seq},
                    {"gr_z", r.gr_z_witness.witness.seq}};
  j["duality_ok"] = r.duality_ok;
  return j;
}

}  // namespace zflab
