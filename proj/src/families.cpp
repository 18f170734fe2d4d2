#include "zflab/families.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace zflab {

SimpleGraph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, e);
}

SimpleGraph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, e);
}

SimpleGraph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return SimpleGraph(n, e);
}

SimpleGraph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return SimpleGraph(leaves + 1, e);
}

SimpleGraph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return SimpleGraph(10, e);
}

SimpleGraph cube_graph() {
  std::vector<Edge> e;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 0; bit < 3; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) e.emplace_back(v, w);
    }
  }
  return SimpleGraph(8, e);
}

SimpleGraph diamond_graph() { return SimpleGraph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

SimpleGraph random_tree(int n, std::mt19937_64& rng) {
  if (n <= 1) return SimpleGraph(n);
  if (n == 2) return path_graph(2);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> e;
  for (int c : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  e.emplace_back(a, b);
  return SimpleGraph(n, e);
}

SimpleGraph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  const SimpleGraph tree = random_tree(n, rng);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e = tree.edges();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!tree.has_edge(u, v) && coin(rng)) e.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, e);
}

}  // namespace zflab
