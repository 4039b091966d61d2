#include "disting/isomorphism.hpp"

#include <algorithm>

namespace disting {

namespace {

// Sorted (degree, sorted neighbor degrees) signature per vertex.
std::vector<std::vector<int>> vertex_signatures(const graph& g) {
  std::vector<std::vector<int>> sig(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); v++) {
    sig[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  return sig;
}

bool extend(const graph& a, const graph& b, std::vector<int>& image,
            std::vector<bool>& used, int v) {
  int n = a.vertex_count();
  if (v == n) return true;
  for (int u = 0; u < n; u++) {
    if (used[u] || a.degree(v) != b.degree(u)) continue;
    bool ok = true;
    for (int w = 0; w < v && ok; w++)
      if (a.adjacent(v, w) != b.adjacent(u, image[w])) ok = false;
    if (!ok) continue;
    image[v] = u;
    used[u] = true;
    if (extend(a, b, image, used, v + 1)) return true;
    used[u] = false;
  }
  return false;
}

graph make_paw() { return graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

graph make_diamond() { return graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace

bool isomorphic(const graph& a, const graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  auto sa = vertex_signatures(a);
  auto sb = vertex_signatures(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> image(a.vertex_count(), -1);
  std::vector<bool> used(a.vertex_count(), false);
  return extend(a, b, image, used, 0);
}

std::string to_string(sabidussi_exception e) {
  switch (e) {
    case sabidussi_exception::none: return "none";
    case sabidussi_exception::p2: return "p2";
    case sabidussi_exception::q: return "q";
    case sabidussi_exception::lq: return "lq";
  }
  return "none";
}

sabidussi_exception detect_sabidussi_exception(const graph& g) {
  if (g.vertex_count() == 2 && g.edge_count() == 1) return sabidussi_exception::p2;
  if (g.vertex_count() == 4 && g.edge_count() == 4 && isomorphic(g, make_paw()))
    return sabidussi_exception::q;
  if (g.vertex_count() == 4 && g.edge_count() == 5 && isomorphic(g, make_diamond()))
    return sabidussi_exception::lq;
  return sabidussi_exception::none;
}

}  // namespace disting
