#include "disting/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "disting/errors.hpp"
#include "disting/families.hpp"

namespace disting {

namespace {

[[noreturn]] void fail(int line_number, const std::string& what) {
  throw parse_error("line " + std::to_string(line_number) + ": " + what);
}

}  // namespace

graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  bool have_header = false;
  int n = 0, m = 0;
  std::vector<edge> edges;

  while (std::getline(in, line)) {
    line_number++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;  // blank line
    if (tag[0] == '#') continue;

    if (tag == "p") {
      if (have_header) fail(line_number, "duplicate header line");
      if (!(fields >> n >> m)) fail(line_number, "header needs vertex and edge counts");
      if (n < 0 || m < 0) fail(line_number, "counts must be nonnegative");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail(line_number, "edge before header line");
      int u = 0, v = 0;
      if (!(fields >> u >> v)) fail(line_number, "edge needs two endpoints");
      edges.push_back({u, v});
    } else {
      fail(line_number, "unknown record '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) fail(line_number, "trailing text '" + extra + "'");
  }

  if (!have_header) throw parse_error("missing header line 'p <n> <m>'");
  if (static_cast<int>(edges.size()) != m)
    throw parse_error("header promises " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  try {
    return graph(n, edges);
  } catch (const parameter_error& e) {
    throw parse_error(std::string("invalid graph: ") + e.what());
  }
}

std::string format_edge_list(const graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
  return out.str();
}

graph graph_from_source(const std::string& source) {
  try {
    return make_family(parse_family_spec(source));
  } catch (const parse_error&) {
    // Not a shorthand: treat as a file path.
  }
  std::ifstream file(source);
  if (!file) throw parse_error("cannot open graph file '" + source + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_edge_list(buffer.str());
}

}  // namespace disting
