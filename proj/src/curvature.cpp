#include "afrc/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "afrc/orc_reference.hpp"

namespace afrc {

std::string to_string(CurvatureKind kind) {
  switch (kind) {
    case CurvatureKind::AF3:
      return "af3";
    case CurvatureKind::AF4:
      return "af4";
    case CurvatureKind::OrcRef:
      return "orc-ref";
  }
  return "unknown";
}

CurvatureKind curvature_kind_from_string(const std::string& name) {
  if (name == "af3") return CurvatureKind::AF3;
  if (name == "af4") return CurvatureKind::AF4;
  if (name == "orc-ref") return CurvatureKind::OrcRef;
  throw ContractError("unknown curvature kind '" + name + "'");
}

double af3_edge(const Graph& g, Edge e) {
  const double du = static_cast<double>(g.degree(e.u));
  const double dv = static_cast<double>(g.degree(e.v));
  return 4.0 - du - dv + 3.0 * static_cast<double>(triangle_count(g, e));
}

double af4_edge(const Graph& g, Edge e) {
  const double du = static_cast<double>(g.degree(e.u));
  const double dv = static_cast<double>(g.degree(e.v));
  return 4.0 - du - dv + 3.0 * static_cast<double>(triangle_count(g, e)) +
         2.0 * static_cast<double>(quadrangle_count(g, e));
}

CurvatureBounds curvature_bounds(const Graph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw ContractError("curvature_bounds: " + to_string(e) +
                        " is not an edge of the graph");
  }
  const double du = static_cast<double>(g.degree(e.u));
  const double dv = static_cast<double>(g.degree(e.v));
  const double m = std::max(du, dv);
  const double n = std::min(du, dv);
  return CurvatureBounds{4.0 - m - n, n + 1.0, 2.0 * m * n - 3.0 * n + 3.0};
}

CurvatureMap compute_all(const Graph& g, CurvatureKind kind,
                         const ComputeOptions& options) {
  CurvatureMap map;
  map.kind = kind;
  map.edges = g.edges();
  map.values.resize(map.edges.size());
  map.graph_fingerprint = g.fingerprint();

  auto value_of = [&](Edge e) -> double {
    switch (kind) {
      case CurvatureKind::AF3:
        return af3_edge(g, e);
      case CurvatureKind::AF4:
        return af4_edge(g, e);
      case CurvatureKind::OrcRef:
        return orc_edge_reference(g, e, options.orc_degree_guard);
    }
    throw ContractError("compute_all: invalid curvature kind");
  };

  const std::size_t count = map.edges.size();
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || count < 2 * threads) {
    for (std::size_t i = 0; i < count; ++i) {
      map.values[i] = value_of(map.edges[i]);
    }
    return map;
  }

  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) {
          map.values[i] = value_of(map.edges[i]);
        }
      } catch (...) {
        std::scoped_lock lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (failure) std::rethrow_exception(failure);
  return map;
}

namespace {

struct Moments {
  double min, max, mean, std;
};

Moments moments(std::span<const double> values) {
  double mn = values[0], mx = values[0], sum = 0.0;
  for (double v : values) {
    mn = std::min(mn, v);
    mx = std::max(mx, v);
    sum += v;
  }
  const double mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return Moments{mn, mx, mean,
                 std::sqrt(ss / static_cast<double>(values.size()))};
}

void require_nonempty(const CurvatureMap& map) {
  if (map.values.empty()) {
    throw ContractError("curvature_stats: empty curvature map");
  }
}

}  // namespace

CurvatureStats curvature_stats(const CurvatureMap& map) {
  require_nonempty(map);
  const Moments m = moments(map.values);
  return CurvatureStats{m.min, m.max, m.mean, m.std, std::nullopt};
}

CurvatureStats curvature_stats(const CurvatureMap& af3, const CurvatureMap& af4) {
  require_nonempty(af3);
  require_nonempty(af4);
  if (af3.graph_fingerprint != af4.graph_fingerprint) {
    throw StalenessError(
        "curvature_stats: maps were computed on different graphs");
  }
  const Moments m3 = moments(af3.values);
  const Moments m4 = moments(af4.values);
  CurvatureStats stats{m3.min, m3.max, m3.mean, m3.std, std::nullopt};
  if (m3.std == 0.0 || m4.std == 0.0) {
    // Pearson correlation is undefined for a constant map; equal constant
    // maps report 1 by convention.
    if (af3.values == af4.values) {
      stats.corr_af3_af4 = 1.0;
      return stats;
    }
    throw ContractError(
        "curvature_stats: correlation undefined (constant map)");
  }
  double cov = 0.0;
  for (std::size_t i = 0; i < af3.values.size(); ++i) {
    cov += (af3.values[i] - m3.mean) * (af4.values[i] - m4.mean);
  }
  cov /= static_cast<double>(af3.values.size());
  stats.corr_af3_af4 = cov / (m3.std * m4.std);
  return stats;
}

}  // namespace afrc
