#pragma once

#include <cstddef>

#include "afrc/graph.hpp"
#include "afrc/rng.hpp"

namespace afrc {

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

// Erdős–Rényi G(n, p) via geometric skip sampling, O(n + |E|) expected.
Graph gnp_random_graph(std::size_t n, double p, Xorshift64Star& rng);

// Ring lattice where each node connects to the k nearest nodes on each side;
// 2k-regular for n > 2k.
Graph circulant_graph(std::size_t n, std::size_t k);

// Two complete graphs K_clique joined by `bridges` disjoint edges
// (clique-A node i to clique-B node i).
Graph barbell_graph(std::size_t clique, std::size_t bridges = 1);

// Uniform random recursive tree: node i attaches to a uniform earlier node.
Graph random_tree(std::size_t n, Xorshift64Star& rng);

}  // namespace afrc
