#pragma once

#include <cstdint>
#include <random>

#include "zflab/graph.hpp"

namespace zflab {

// Small named graphs. Labels follow the usual conventions: paths and cycles
// are numbered along the path/cycle, star centre is 0.
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph star_graph(int leaves);
SimpleGraph petersen_graph();
SimpleGraph cube_graph();  // Q_3, vertices are 3-bit words
// K_4 minus edge {0, 3}; 1 and 2 are the degree-3 vertices.
SimpleGraph diamond_graph();

// Connected graph on n vertices: a random spanning tree plus each remaining
// pair independently with probability p.
SimpleGraph random_connected_graph(int n, double p, std::mt19937_64& rng);
// Uniform labelled tree (random Pruefer sequence).
SimpleGraph random_tree(int n, std::mt19937_64& rng);

}  // namespace zflab
