#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "afrc/errors.hpp"

namespace afrc {

// Dense node index in [0, node_count).
using NodeId = std::uint32_t;

// Canonical undirected edge: u < v always.
struct Edge {
  NodeId u;
  NodeId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes (a, b) to canonical order. Throws ContractError on self-loops.
Edge make_edge(NodeId a, NodeId b);

std::string to_string(Edge e);

// Simple undirected graph over dense node ids with sorted adjacency sets.
//
// Nodes may carry original string labels from an ingested edge list; graphs
// built programmatically label node i as "i". The graph is immutable during
// analysis passes (all queries are const and pure); add_edge/remove_edge
// require exclusive access.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Appends an isolated node and returns its id.
  NodeId add_node();

  // Sorted ascending; valid until the next mutation.
  std::span<const NodeId> neighbors(NodeId u) const;
  std::size_t degree(NodeId u) const;
  std::size_t max_degree() const;

  bool has_node(NodeId u) const { return u < adjacency_.size(); }
  bool has_edge(NodeId a, NodeId b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  // Returns false (and leaves the graph unchanged) if the edge already
  // exists. Throws ContractError on self-loops or unknown nodes.
  bool add_edge(NodeId a, NodeId b);

  // Returns false if the edge is absent. Throws ContractError on unknown
  // nodes.
  bool remove_edge(Edge e);

  // Canonical edge list, sorted by (u, v). Rebuilt lazily after mutation.
  const std::vector<Edge>& edges() const;

  // Hash of (node_count, canonical edge list); used as a staleness guard for
  // derived per-edge artifacts.
  std::uint64_t fingerprint() const;

  // Original label for a node ("u" itself when the graph was built
  // programmatically).
  std::string label(NodeId u) const;

  // Returns the dense id for a label, interning it (and appending a node) if
  // unseen. Used by the edge-list loader; first-appearance order fixes ids.
  NodeId intern_label(const std::string& label);

  bool operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_;
  }

 private:
  void check_node(NodeId u) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::string> labels_;  // empty when labels are identity
  std::unordered_map<std::string, NodeId> label_ids_;
  std::size_t edge_count_ = 0;
  mutable std::vector<Edge> edge_cache_;
  mutable bool edge_cache_valid_ = false;
};

// Degrees, sorted degree pair and motif counts around one edge.
struct EdgeNeighborhoodProfile {
  std::uint64_t deg_u;
  std::uint64_t deg_v;
  std::uint64_t m;  // max(deg_u, deg_v)
  std::uint64_t n;  // min(deg_u, deg_v)
  std::uint64_t triangles;
  std::uint64_t quadrangles;
};

// |N_u ∩ N_v| via sorted-set intersection, O(deg u + deg v).
// Throws ContractError if e is not an edge of g.
std::uint64_t triangle_count(const Graph& g, Edge e);

// Number of diagonal-free 4-cycles through e = (u, v): pairs (p, q) in E with
// p adjacent to u but not to v (p != v), q adjacent to v but not to u
// (q != u). O(deg u * deg v) worst case.
std::uint64_t quadrangle_count(const Graph& g, Edge e);

// |Ñ_u Δ Ñ_v| where Ñ_x = N_x ∪ {x}.
std::uint64_t closed_neighborhood_symmetric_difference(const Graph& g, Edge e);

// |S| where S = {(p, q) in E : p in Ñ_u \ Ñ_v, q in Ñ_v \ Ñ_u} — edges
// between the exclusive closed neighborhoods of the endpoints.
std::uint64_t bridging_set_size(const Graph& g, Edge e);

EdgeNeighborhoodProfile edge_profile(const Graph& g, Edge e);

// Number of connected components (isolated nodes count).
std::size_t component_count(const Graph& g);

// Largest shortest-path distance over all reachable pairs. Throws
// ContractError on an empty graph; disconnected pairs are ignored.
std::size_t graph_diameter(const Graph& g);

// True when every node has the same degree.
bool is_regular(const Graph& g);

}  // namespace afrc
