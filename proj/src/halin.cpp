#include "zflab/halin.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "zflab/families.hpp"

namespace zflab {

using nlohmann::json;

PlaneTree plane_tree_from_json(const json& j) {
  PlaneTree t;
  int max_id = -1;
  for (const json& e : j.at("tree_edges")) {
    if (!e.is_array() || e.size() != 2) throw GraphError("tree edge must be a pair [u, v]");
    t.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    max_id = std::max({max_id, e[0].get<int>(), e[1].get<int>()});
  }
  t.n = j.contains("n") ? j.at("n").get<int>() : max_id + 1;
  if (j.contains("children_order")) {
    for (const auto& [key, kids] : j.at("children_order").items()) {
      t.children_order[std::stoi(key)] = kids.get<std::vector<Vertex>>();
    }
  }
  if (j.contains("root")) t.root = j.at("root").get<Vertex>();
  return t;
}

json to_json(const PlaneTree& t) {
  json edges = json::array();
  for (const Edge& e : t.edges) edges.push_back({e.u, e.v});
  json order = json::object();
  for (const auto& [v, kids] : t.children_order) order[std::to_string(v)] = kids;
  return {{"n", t.n}, {"tree_edges", edges}, {"children_order", order}, {"root", t.root}};
}

std::vector<Vertex> end_support_vertices(const SimpleGraph& tree) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (tree.degree(v) <= 1 && tree.order() > 2) continue;
    int leaves = 0;
    int others = 0;
    for (Vertex w : tree.neighbors(v)) (tree.degree(w) == 1 ? leaves : others) += 1;
    if (leaves > 0 && others <= 1) out.push_back(v);
  }
  return out;
}

bool is_star(const SimpleGraph& tree) {
  if (tree.order() <= 3) return true;
  return tree.max_degree() == tree.order() - 1;
}

HalinStructure build_halin(const PlaneTree& t) {
  HalinStructure hs;
  hs.embedding = t;
  const int n = t.n;
  if (n < 1 || static_cast<int>(t.edges.size()) != n - 1) {
    throw DegenerateTree("not a tree: " + std::to_string(t.edges.size()) + " edges on " +
                         std::to_string(n) + " vertices");
  }
  hs.tree = SimpleGraph(n, t.edges);
  if (!hs.tree.is_connected()) throw DegenerateTree("not a tree: disconnected");
  if (is_star(hs.tree)) throw DegenerateTree("tree is a star");
  if (t.root < 0 || t.root >= n) throw DegenerateTree("root out of range");

  // Resolve the embedding and walk it to order the leaves.
  hs.children.assign(n, {});
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  std::vector<Vertex> stack{t.root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    std::vector<Vertex> kids;
    for (Vertex w : hs.tree.neighbors(v)) {
      if (w != parent[v]) kids.push_back(w);
    }
    if (auto it = t.children_order.find(v); it != t.children_order.end()) {
      auto given = it->second;
      auto sorted_given = given;
      std::sort(sorted_given.begin(), sorted_given.end());
      if (sorted_given != kids) {
        throw GraphError("children_order of " + std::to_string(v) +
                         " does not list exactly its children");
      }
      kids = std::move(given);
    }
    hs.children[v] = kids;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      parent[*it] = v;
      stack.push_back(*it);
    }
  }
  for (const auto& [v, kids] : t.children_order) {
    if (v < 0 || v >= n) throw GraphError("children_order names unknown vertex");
  }

  hs.cycle_position.assign(n, -1);
  for (Vertex v : order) {
    if (hs.tree.degree(v) == 1) {
      hs.cycle_position[v] = static_cast<int>(hs.leaf_cycle.size());
      hs.leaf_cycle.push_back(v);
    }
  }

  std::vector<Edge> all = t.edges;
  const int m = static_cast<int>(hs.leaf_cycle.size());
  for (int i = 0; i < m; ++i) all.emplace_back(hs.leaf_cycle[i], hs.leaf_cycle[(i + 1) % m]);
  try {
    hs.graph = SimpleGraph(n, all);
  } catch (const GraphError& e) {
    throw DegenerateTree(std::string("leaf cycle is degenerate: ") + e.what());
  }
  if (hs.graph.min_degree() < 3) {
    throw DegenerateTree("minimum degree " + std::to_string(hs.graph.min_degree()) + " < 3");
  }

  hs.deg_prime.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (hs.is_leaf(v)) continue;
    for (Vertex w : hs.tree.neighbors(v)) hs.deg_prime[v] += hs.is_leaf(w) ? 0 : 1;
  }
  hs.end_support = end_support_vertices(hs.tree);
  if (hs.end_support.size() < 2) {
    throw DegenerateTree("fewer than two end support vertices");
  }

  for (Vertex v = 0; v < n; ++v) {
    if (!hs.is_leaf(v) && hs.deg_prime[v] != 2) hs.reduced_nodes.push_back(v);
  }
  for (Vertex a : hs.reduced_nodes) {
    for (Vertex start : hs.tree.neighbors(a)) {
      if (hs.is_leaf(start)) continue;
      Vertex prev = a;
      Vertex cur = start;
      while (hs.deg_prime[cur] == 2) {
        for (Vertex w : hs.tree.neighbors(cur)) {
          if (w != prev && !hs.is_leaf(w)) {
            prev = cur;
            cur = w;
            break;
          }
        }
      }
      if (a < cur) hs.reduced_edges.emplace_back(a, cur);
    }
  }
  std::sort(hs.reduced_edges.begin(), hs.reduced_edges.end());
  return hs;
}

namespace {

std::vector<Vertex> window(const HalinStructure& hs, Vertex leaf) {
  const int m = static_cast<int>(hs.leaf_cycle.size());
  const int p = hs.cycle_position[leaf];
  return {hs.leaf_cycle[(p + m - 1) % m], leaf, hs.leaf_cycle[(p + 1) % m]};
}

std::vector<Vertex> leaves_of(const HalinStructure& hs, Vertex s) {
  std::vector<Vertex> out;
  for (Vertex w : hs.tree.neighbors(s)) {
    if (hs.is_leaf(w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end(),
            [&](Vertex a, Vertex b) { return hs.cycle_position[a] < hs.cycle_position[b]; });
  return out;
}

// Depth-first search for leaves whose triples are pairwise disjoint.
struct WindowSearch {
  const HalinStructure& hs;
  std::vector<Vertex> supports;
  std::vector<std::vector<Vertex>> options;
  std::vector<char> used;
  std::vector<Vertex> picked;
  long budget = 200000;

  bool run(std::size_t i) {
    if (i == supports.size()) return true;
    if (--budget < 0) return false;
    for (Vertex leaf : options[i]) {
      const auto w = window(hs, leaf);
      if (used[w[0]] || used[w[1]] || used[w[2]]) continue;
      for (Vertex x : w) used[x] = 1;
      picked.push_back(leaf);
      if (run(i + 1)) return true;
      picked.pop_back();
      for (Vertex x : w) used[x] = 0;
    }
    return false;
  }
};

}  // namespace

HalinForcingSet construct_forcing_set(const HalinStructure& hs) {
  if (hs.end_support.size() < 2) throw DegenerateTree("fewer than two end support vertices");
  HalinForcingSet out;

  // Try roots in ascending order until the triples can be kept disjoint;
  // otherwise fall back to the smallest root with first leaves.
  bool found = false;
  for (Vertex root : hs.end_support) {
    WindowSearch search{hs, {}, {}, std::vector<char>(hs.graph.order(), 0), {}};
    for (Vertex s : hs.end_support) {
      if (s == root) continue;
      search.supports.push_back(s);
      search.options.push_back(leaves_of(hs, s));
    }
    if (search.run(0)) {
      out.root = root;
      for (std::size_t i = 0; i < search.supports.size(); ++i) {
        out.chosen_leaf[search.supports[i]] = search.picked[i];
      }
      found = true;
      break;
    }
  }
  if (!found) {
    out.root = hs.end_support.front();
    for (Vertex s : hs.end_support) {
      if (s != out.root) out.chosen_leaf[s] = leaves_of(hs, s).front();
    }
  }

  for (const auto& [s, leaf] : out.chosen_leaf) {
    for (Vertex x : window(hs, leaf)) out.set.push_back(x);
  }
  std::sort(out.set.begin(), out.set.end());
  out.set.erase(std::unique(out.set.begin(), out.set.end()), out.set.end());
  out.windows_disjoint =
      static_cast<int>(out.set.size()) == 3 * (static_cast<int>(hs.end_support.size()) - 1);

  ClosureResult r = closure(hs.graph, out.set, Rule::standard);
  if (!r.state.all_blue()) {
    throw NotForcing("constructed set leaves " + std::to_string(hs.graph.order() - r.state.count()) +
                     " vertices white");
  }
  out.certificate = std::move(r.certificate);
  return out;
}

HalinReport halin_report(const HalinStructure& hs) {
  HalinReport r;
  r.n = hs.graph.order();
  r.end_support = static_cast<int>(hs.end_support.size());
  r.z_upper = 3 * (r.end_support - 1);
  r.gr_lower = r.n - r.z_upper;
  r.no_branching = std::none_of(hs.deg_prime.begin(), hs.deg_prime.end(), [](int d) { return d >= 3; });
  if (r.no_branching) {
    r.exact_z = 3;
    r.exact_z_loop = 3;
    r.exact_gr = r.n - 3;
  }
  return r;
}

json to_json(const HalinReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  return {{"n", r.n},
          {"end_support", r.end_support},
          {"z_upper", r.z_upper},
          {"gr_lower", r.gr_lower},
          {"no_branching", r.no_branching},
          {"exact_z", opt(r.exact_z)},
          {"exact_z_loop", opt(r.exact_z_loop)},
          {"exact_gr", opt(r.exact_gr)}};
}

HalinStructure generate_random_halin(int internal_size, std::uint64_t seed, bool path_only) {
  if (internal_size < 2) throw std::invalid_argument("need at least two internal vertices");
  std::mt19937_64 rng(seed);
  const SimpleGraph inner = path_only ? path_graph(internal_size) : random_tree(internal_size, rng);

  std::vector<Edge> edges = inner.edges();
  int n = internal_size;
  std::uniform_int_distribution<int> extra(0, 1);
  for (Vertex v = 0; v < internal_size; ++v) {
    const int need = std::max(0, 3 - inner.degree(v));
    const int add = std::max(need, inner.degree(v) == 1 ? 2 : 0) + extra(rng);
    for (int i = 0; i < add; ++i) edges.emplace_back(v, n++);
  }

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  PlaneTree t;
  t.n = n;
  for (const Edge& e : edges) t.edges.emplace_back(perm[e.u], perm[e.v]);
  std::sort(t.edges.begin(), t.edges.end());
  t.root = perm[0];

  // Random clockwise order of children.
  const SimpleGraph tree(n, t.edges);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> stack{t.root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    std::vector<Vertex> kids;
    for (Vertex w : tree.neighbors(v)) {
      if (w != parent[v]) {
        kids.push_back(w);
        parent[w] = v;
        stack.push_back(w);
      }
    }
    std::shuffle(kids.begin(), kids.end(), rng);
    if (!kids.empty()) t.children_order[v] = std::move(kids);
  }
  return build_halin(t);
}

}  // namespace zflab
