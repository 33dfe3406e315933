#include "afrc/graph.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <numeric>

namespace afrc {

namespace {

// splitmix64 finalizer; used as the mixing step of the fingerprint hash.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Sorted vectors as sets: a \ (b ∪ {drop}).
std::vector<NodeId> sorted_difference(std::span<const NodeId> a,
                                      std::span<const NodeId> b,
                                      NodeId drop) {
  std::vector<NodeId> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  auto it = std::lower_bound(out.begin(), out.end(), drop);
  if (it != out.end() && *it == drop) out.erase(it);
  return out;
}

std::uint64_t sorted_intersection_size(std::span<const NodeId> a,
                                       std::span<const NodeId> b) {
  std::uint64_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

Edge make_edge(NodeId a, NodeId b) {
  if (a == b) {
    throw ContractError("self-loop (" + std::to_string(a) + ", " +
                        std::to_string(b) + ") is not a valid edge");
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(Edge e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

NodeId Graph::add_node() {
  adjacency_.emplace_back();
  return static_cast<NodeId>(adjacency_.size() - 1);
}

void Graph::check_node(NodeId u) const {
  if (!has_node(u)) {
    throw ContractError("node " + std::to_string(u) +
                        " is out of range (node count " +
                        std::to_string(adjacency_.size()) + ")");
  }
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  check_node(u);
  return adjacency_[u];
}

std::size_t Graph::degree(NodeId u) const {
  check_node(u);
  return adjacency_[u].size();
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nbrs : adjacency_) d = std::max(d, nbrs.size());
  return d;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (!has_node(a) || !has_node(b) || a == b) return false;
  // Probe the smaller adjacency set.
  const auto& small =
      adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const NodeId target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  return std::binary_search(small.begin(), small.end(), target);
}

bool Graph::add_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  Edge e = make_edge(a, b);
  auto& au = adjacency_[e.u];
  auto it = std::lower_bound(au.begin(), au.end(), e.v);
  if (it != au.end() && *it == e.v) return false;
  au.insert(it, e.v);
  auto& av = adjacency_[e.v];
  av.insert(std::lower_bound(av.begin(), av.end(), e.u), e.u);
  ++edge_count_;
  edge_cache_valid_ = false;
  return true;
}

bool Graph::remove_edge(Edge e) {
  check_node(e.u);
  check_node(e.v);
  auto& au = adjacency_[e.u];
  auto it = std::lower_bound(au.begin(), au.end(), e.v);
  if (it == au.end() || *it != e.v) return false;
  au.erase(it);
  auto& av = adjacency_[e.v];
  av.erase(std::lower_bound(av.begin(), av.end(), e.u));
  --edge_count_;
  edge_cache_valid_ = false;
  return true;
}

const std::vector<Edge>& Graph::edges() const {
  if (!edge_cache_valid_) {
    edge_cache_.clear();
    edge_cache_.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
      for (NodeId v : adjacency_[u]) {
        if (u < v) edge_cache_.push_back({u, v});
      }
    }
    edge_cache_valid_ = true;
  }
  return edge_cache_;
}

std::uint64_t Graph::fingerprint() const {
  std::uint64_t h = mix64(0x9E3779B97F4A7C15ull ^ adjacency_.size());
  for (const Edge& e : edges()) {
    h = mix64(h ^ (static_cast<std::uint64_t>(e.u) << 32 | e.v));
  }
  return h;
}

std::string Graph::label(NodeId u) const {
  check_node(u);
  if (u < labels_.size() && !labels_[u].empty()) return labels_[u];
  return std::to_string(u);
}

NodeId Graph::intern_label(const std::string& label) {
  auto it = label_ids_.find(label);
  if (it != label_ids_.end()) return it->second;
  NodeId id = add_node();
  labels_.resize(adjacency_.size());
  labels_[id] = label;
  label_ids_.emplace(label, id);
  return id;
}

namespace {

void require_edge(const Graph& g, Edge e, const char* op) {
  if (!g.has_edge(e)) {
    throw ContractError(std::string(op) + ": " + to_string(e) +
                        " is not an edge of the graph");
  }
}

}  // namespace

std::uint64_t triangle_count(const Graph& g, Edge e) {
  require_edge(g, e, "triangle_count");
  return sorted_intersection_size(g.neighbors(e.u), g.neighbors(e.v));
}

std::uint64_t quadrangle_count(const Graph& g, Edge e) {
  require_edge(g, e, "quadrangle_count");
  const auto nu = g.neighbors(e.u);
  const auto nv = g.neighbors(e.v);
  // Exclusive open neighborhoods: supports of diagonal-free 4-cycles.
  std::vector<NodeId> cu = sorted_difference(nu, nv, e.v);
  std::vector<NodeId> cv = sorted_difference(nv, nu, e.u);
  if (cu.empty() || cv.empty()) return 0;
  std::uint64_t q = 0;
  for (NodeId p : cu) {
    q += sorted_intersection_size(g.neighbors(p), cv);
  }
  return q;
}

std::uint64_t closed_neighborhood_symmetric_difference(const Graph& g, Edge e) {
  require_edge(g, e, "closed_neighborhood_symmetric_difference");
  // u and v belong to both closed neighborhoods, so the symmetric difference
  // is exactly the union of the exclusive open neighborhoods.
  const auto nu = g.neighbors(e.u);
  const auto nv = g.neighbors(e.v);
  return sorted_difference(nu, nv, e.v).size() +
         sorted_difference(nv, nu, e.u).size();
}

std::uint64_t bridging_set_size(const Graph& g, Edge e) {
  require_edge(g, e, "bridging_set_size");
  // Ñ_u \ Ñ_v = N_u \ (N_v ∪ {v}) on an edge (u itself is adjacent to v).
  const auto nu = g.neighbors(e.u);
  const auto nv = g.neighbors(e.v);
  std::vector<NodeId> side_u = sorted_difference(nu, nv, e.v);
  std::vector<NodeId> side_v = sorted_difference(nv, nu, e.u);
  if (side_u.empty() || side_v.empty()) return 0;
  std::uint64_t s = 0;
  for (NodeId p : side_u) {
    s += sorted_intersection_size(g.neighbors(p), side_v);
  }
  return s;
}

EdgeNeighborhoodProfile edge_profile(const Graph& g, Edge e) {
  require_edge(g, e, "edge_profile");
  const std::uint64_t du = g.degree(e.u);
  const std::uint64_t dv = g.degree(e.v);
  return EdgeNeighborhoodProfile{
      du,
      dv,
      std::max(du, dv),
      std::min(du, dv),
      triangle_count(g, e),
      quadrangle_count(g, e),
  };
}

std::size_t component_count(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> seen(n, 0);
  std::size_t components = 0;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return components;
}

std::size_t graph_diameter(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw ContractError("graph_diameter: empty graph");
  std::size_t diameter = 0;
  std::vector<std::uint32_t> dist(n);
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] == UINT32_MAX) {
          dist[v] = dist[u] + 1;
          diameter = std::max<std::size_t>(diameter, dist[v]);
          queue.push_back(v);
        }
      }
    }
  }
  return diameter;
}

bool is_regular(const Graph& g) {
  if (g.node_count() == 0) return true;
  const std::size_t d = g.degree(0);
  for (NodeId u = 1; u < g.node_count(); ++u) {
    if (g.degree(u) != d) return false;
  }
  return true;
}

}  // namespace afrc
