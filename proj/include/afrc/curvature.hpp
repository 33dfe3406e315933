#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "afrc/graph.hpp"

namespace afrc {

enum class CurvatureKind { AF3, AF4, OrcRef };

std::string to_string(CurvatureKind kind);
CurvatureKind curvature_kind_from_string(const std::string& name);

// Per-edge curvature values for one kind, aligned with the canonical edge
// list of the graph the map was computed on. The fingerprint guards against
// using a stale map after the graph mutated.
struct CurvatureMap {
  CurvatureKind kind = CurvatureKind::AF3;
  std::vector<Edge> edges;
  std::vector<double> values;
  std::uint64_t graph_fingerprint = 0;

  std::size_t size() const { return values.size(); }
};

// 4 - deg(u) - deg(v) + 3·triangles.
double af3_edge(const Graph& g, Edge e);

// 4 - deg(u) - deg(v) + 3·triangles + 2·quadrangles.
double af4_edge(const Graph& g, Edge e);

// Edge-level curvature range from the sorted degree pair m >= n:
//   4 - m - n <= AF3 <= n + 1
//   4 - m - n <= AF4 <= 2mn - 3n + 3
struct CurvatureBounds {
  double lower;
  double upper_af3;
  double upper_af4;
};

CurvatureBounds curvature_bounds(const Graph& g, Edge e);

struct ComputeOptions {
  unsigned threads = 1;  // >1 fans out over edges; output is bit-identical
  std::size_t orc_degree_guard = 64;
};

// Curvature of every edge, in canonical edge order. Deterministic across
// thread counts: each edge's value is a pure function of the graph, written
// to its own pre-sized slot.
CurvatureMap compute_all(const Graph& g, CurvatureKind kind,
                         const ComputeOptions& options = {});

struct CurvatureStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double std = 0.0;
  std::optional<double> corr_af3_af4;
};

// Summary moments of one map. Throws on an empty map.
CurvatureStats curvature_stats(const CurvatureMap& map);

// Moments of `af3` plus its Pearson correlation with `af4`. Both maps must
// share a graph fingerprint. If either map is constant, the correlation is 1
// when the maps are equal (by convention) and an error otherwise.
CurvatureStats curvature_stats(const CurvatureMap& af3, const CurvatureMap& af4);

}  // namespace afrc
