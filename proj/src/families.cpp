#include "disting/families.hpp"

#include <map>
#include <stdexcept>

#include "disting/errors.hpp"

namespace disting {

namespace {

const std::map<std::string, family>& shorthand_names() {
  static const std::map<std::string, family> names = {
      {"path", family::path},
      {"cycle", family::cycle},
      {"complete", family::complete},
      {"kst", family::complete_bipartite},
      {"friendship", family::friendship},
      {"book", family::book},
      {"symtree", family::symmetric_tree},
      {"bisymtree", family::bisymmetric_tree},
      {"petersen", family::petersen},
      {"substar", family::subdivided_star},
  };
  return names;
}

std::size_t expected_param_count(family f) {
  switch (f) {
    case family::complete_bipartite:
    case family::symmetric_tree:
    case family::bisymmetric_tree:
      return 2;
    case family::petersen:
      return 0;
    default:
      return 1;
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw parameter_error(message);
}

}  // namespace

family_spec parse_family_spec(const std::string& text) {
  std::string name = text;
  std::string args;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  auto it = shorthand_names().find(name);
  if (it == shorthand_names().end())
    throw parse_error("unknown family shorthand '" + name + "'");

  family_spec spec{it->second, {}};
  std::size_t pos = 0;
  while (pos < args.size()) {
    auto comma = args.find(',', pos);
    std::string token = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      spec.params.push_back(value);
    } catch (const std::exception&) {
      throw parse_error("bad integer parameter '" + token + "' in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (spec.params.size() != expected_param_count(spec.fam))
    throw parse_error("family '" + name + "' takes " +
                      std::to_string(expected_param_count(spec.fam)) +
                      " parameter(s), got " + std::to_string(spec.params.size()));
  return spec;
}

std::string to_string(const family_spec& spec) {
  std::string name;
  for (const auto& [key, value] : shorthand_names())
    if (value == spec.fam) name = key;
  std::string out = name;
  for (std::size_t i = 0; i < spec.params.size(); i++)
    out += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
  return out;
}

graph make_family(const family_spec& spec) {
  const auto& p = spec.params;
  switch (spec.fam) {
    case family::path:
      return make_path(p[0]);
    case family::cycle:
      return make_cycle(p[0]);
    case family::complete:
      return make_complete(p[0]);
    case family::complete_bipartite:
      return make_complete_bipartite(p[0], p[1]);
    case family::friendship:
      return make_friendship(p[0]);
    case family::book:
      return make_book(p[0]);
    case family::symmetric_tree:
      return make_symmetric_tree(p[0], p[1]);
    case family::bisymmetric_tree:
      return make_bisymmetric_tree(p[0], p[1]);
    case family::petersen:
      return make_petersen();
    case family::subdivided_star:
      return make_subdivided_star(p[0]);
  }
  throw internal_error("unhandled family");
}

graph make_path(int n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<edge> edges;
  for (int i = 0; i + 1 < n; i++) edges.push_back({i, i + 1});
  return graph(n, edges);
}

graph make_cycle(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<edge> edges;
  for (int i = 0; i + 1 < n; i++) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return graph(n, edges);
}

graph make_complete(int n) {
  require(n >= 1, "complete graph requires n >= 1");
  std::vector<edge> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) edges.push_back({u, v});
  return graph(n, edges);
}

graph make_complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "complete bipartite requires s, t >= 1");
  std::vector<edge> edges;
  for (int x = 0; x < s; x++)
    for (int y = 0; y < t; y++) edges.push_back({x, s + y});
  return graph(s + t, edges);
}

graph make_star(int n) { return make_complete_bipartite(1, n); }

graph make_friendship(int n) {
  require(n >= 2, "friendship graph requires n >= 2");
  std::vector<edge> edges;
  for (int i = 0; i < n; i++) {
    int a = 1 + 2 * i, b = 2 + 2 * i;
    edges.push_back({0, a});
    edges.push_back({0, b});
    edges.push_back({a, b});
  }
  return graph(1 + 2 * n, edges);
}

graph make_book(int n) {
  require(n >= 2, "book graph requires n >= 2");
  std::vector<edge> edges;
  edges.push_back({0, 1});  // spine
  for (int i = 1; i <= n; i++) {
    int vi = 2 * i, wi = 2 * i + 1;
    edges.push_back({0, vi});
    edges.push_back({1, wi});
    edges.push_back({vi, wi});
  }
  return graph(2 * n + 2, edges);
}

graph make_symmetric_tree(int h, int d) {
  require(h >= 1, "symmetric tree requires h >= 1");
  require(d >= 2, "symmetric tree requires d >= 2");
  std::vector<edge> edges;
  std::vector<int> layer{0};
  int next = 1;
  for (int depth = 1; depth <= h; depth++) {
    std::vector<int> child_layer;
    int fanout = depth == 1 ? d : d - 1;
    for (int parent : layer)
      for (int c = 0; c < fanout; c++) {
        edges.push_back({parent, next});
        child_layer.push_back(next++);
      }
    layer = std::move(child_layer);
  }
  return graph(next, edges);
}

graph make_bisymmetric_tree(int h, int d) {
  require(h >= 1, "bisymmetric tree requires h >= 1");
  require(d >= 2, "bisymmetric tree requires d >= 2");
  std::vector<edge> edges{{0, 1}};
  std::vector<int> layer{0, 1};
  int next = 2;
  for (int depth = 1; depth <= h; depth++) {
    std::vector<int> child_layer;
    for (int parent : layer)
      for (int c = 0; c < d - 1; c++) {
        edges.push_back({parent, next});
        child_layer.push_back(next++);
      }
    layer = std::move(child_layer);
  }
  return graph(next, edges);
}

graph make_petersen() {
  std::vector<edge> edges;
  for (int i = 0; i < 5; i++) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return graph(10, edges);
}

graph make_subdivided_star(int n) {
  require(n >= 2, "subdivided star requires n >= 2");
  std::vector<edge> edges;
  for (int i = 0; i < n; i++) {
    int a = 1 + 3 * i, b = 2 + 3 * i, c = 3 + 3 * i;
    edges.push_back({0, a});
    edges.push_back({a, b});
    edges.push_back({b, c});
  }
  return graph(3 * n + 1, edges);
}

}  // namespace disting
