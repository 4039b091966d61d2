#include "disting/products.hpp"

#include "disting/errors.hpp"

namespace disting {

graph join(const graph& g, const graph& h) {
  int n = g.vertex_count(), m = h.vertex_count();
  std::vector<edge> edges = g.edges();
  for (const edge& e : h.edges()) edges.push_back({n + e.u, n + e.v});
  for (int u = 0; u < n; u++)
    for (int a = 0; a < m; a++) edges.push_back({u, n + a});
  return graph(n + m, edges);
}

graph corona(const graph& g, const graph& h) {
  int n = g.vertex_count(), m = h.vertex_count();
  std::vector<edge> edges = g.edges();
  for (int i = 0; i < n; i++) {
    int base = n + i * m;
    for (const edge& e : h.edges()) edges.push_back({base + e.u, base + e.v});
    for (int a = 0; a < m; a++) edges.push_back({i, base + a});
  }
  return graph(n + n * m, edges);
}

graph cartesian_product(const graph& g, const graph& h) {
  int n = g.vertex_count(), m = h.vertex_count();
  std::vector<edge> edges;
  for (int u = 0; u < n; u++)
    for (const edge& e : h.edges()) edges.push_back({u * m + e.u, u * m + e.v});
  for (const edge& e : g.edges())
    for (int a = 0; a < m; a++) edges.push_back({e.u * m + a, e.v * m + a});
  return graph(n * m, edges);
}

graph line_graph(const graph& g) {
  if (g.edge_count() == 0) throw parameter_error("line graph requires at least one edge");
  const auto& ge = g.edges();
  int m = g.edge_count();
  std::vector<edge> edges;
  for (int i = 0; i < m; i++)
    for (int j = i + 1; j < m; j++) {
      const edge &a = ge[i], &b = ge[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        edges.push_back({i, j});
    }
  return graph(m, edges);
}

}  // namespace disting
