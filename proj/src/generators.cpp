#include "afrc/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace afrc {

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ContractError("cycle_graph: need at least 3 nodes");
  Graph g(n);
  for (NodeId u = 0; u < n; ++u) {
    g.add_edge(u, static_cast<NodeId>((u + 1) % n));
  }
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (NodeId u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph gnp_random_graph(std::size_t n, double p, Xorshift64Star& rng) {
  if (p < 0.0 || p > 1.0) throw ContractError("gnp_random_graph: p outside [0, 1]");
  Graph g(n);
  if (n < 2 || p == 0.0) return g;
  if (p == 1.0) return complete_graph(n);
  // Walk the upper triangle with geometric jumps (Batagelj & Brandes 2005).
  const double log_1p = std::log(1.0 - p);
  std::uint64_t u = 1;
  std::int64_t v = -1;
  while (u < n) {
    const double r = 1.0 - rng.next_double();  // (0, 1]
    v += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_1p));
    while (v >= static_cast<std::int64_t>(u) && u < n) {
      v -= static_cast<std::int64_t>(u);
      ++u;
    }
    if (u < n) {
      g.add_edge(static_cast<NodeId>(v), static_cast<NodeId>(u));
    }
  }
  return g;
}

Graph circulant_graph(std::size_t n, std::size_t k) {
  if (n < 2 * k + 1) {
    throw ContractError("circulant_graph: need n > 2k");
  }
  Graph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t off = 1; off <= k; ++off) {
      g.add_edge(u, static_cast<NodeId>((u + off) % n));
    }
  }
  return g;
}

Graph barbell_graph(std::size_t clique, std::size_t bridges) {
  if (clique < 2) throw ContractError("barbell_graph: cliques need >= 2 nodes");
  if (bridges == 0 || bridges > clique) {
    throw ContractError("barbell_graph: bridge count outside [1, clique]");
  }
  Graph g(2 * clique);
  for (NodeId u = 0; u < clique; ++u) {
    for (NodeId v = u + 1; v < clique; ++v) {
      g.add_edge(u, v);
      g.add_edge(static_cast<NodeId>(clique + u), static_cast<NodeId>(clique + v));
    }
  }
  for (std::size_t b = 0; b < bridges; ++b) {
    g.add_edge(static_cast<NodeId>(b), static_cast<NodeId>(clique + b));
  }
  return g;
}

Graph random_tree(std::size_t n, Xorshift64Star& rng) {
  Graph g(n);
  for (NodeId u = 1; u < n; ++u) {
    g.add_edge(static_cast<NodeId>(rng.next_below(u)), u);
  }
  return g;
}

}  // namespace afrc
