#include "afrc/edge_list_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace afrc {

Graph parse_edge_list(std::istream& in, std::string_view origin,
                      LoadSummary* summary) {
  Graph g;
  LoadSummary local;
  std::string line;
  std::size_t line_no = 0;
  const std::string origin_str(origin);
  while (std::getline(in, line)) {
    ++line_no;
    ++local.lines;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == '#') {
      ++local.comment_lines;
      continue;
    }
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b)) {
      throw ParseError("expected two node labels", origin_str, line_no);
    }
    if (fields >> extra) {
      throw ParseError("trailing token '" + extra + "' after edge", origin_str,
                       line_no);
    }
    if (a == b) {
      throw ParseError("self-loop on node '" + a + "'", origin_str, line_no);
    }
    NodeId u = g.intern_label(a);
    NodeId v = g.intern_label(b);
    if (!g.add_edge(u, v)) ++local.duplicate_edges;
  }
  if (summary) *summary = local;
  return g;
}

Graph load_edge_list(const std::filesystem::path& path, LoadSummary* summary) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open edge list '" + path.string() + "' for reading");
  }
  return parse_edge_list(in, path.string(), summary);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  }
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  write_edge_list(g, out);
  out.flush();
  if (!out) {
    throw Error("write to '" + path.string() + "' failed");
  }
}

}  // namespace afrc
