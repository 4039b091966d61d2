#pragma once

#include <string>
#include <vector>

#include "disting/graph.hpp"

namespace disting {

enum class family {
  path,
  cycle,
  complete,
  complete_bipartite,
  friendship,
  book,
  symmetric_tree,
  bisymmetric_tree,
  petersen,
  subdivided_star,
};

// Named graph family plus its integer parameters.
struct family_spec {
  family fam = family::path;
  std::vector<int> params;

  friend bool operator==(const family_spec& a, const family_spec& b) {
    return a.fam == b.fam && a.params == b.params;
  }
};

// Shorthand strings: "path:7", "cycle:6", "complete:5", "kst:4,3",
// "friendship:3", "book:3", "symtree:2,3", "bisymtree:2,3", "petersen",
// "substar:8".
family_spec parse_family_spec(const std::string& text);
std::string to_string(const family_spec& spec);

graph make_family(const family_spec& spec);

// Vertex layouts are fixed so certificates are byte-for-byte reproducible;
// see README for the layout of every family.
graph make_path(int n);                       // vertices 0..n-1 in path order
graph make_cycle(int n);                      // n >= 3
graph make_complete(int n);                   // n >= 1
graph make_complete_bipartite(int s, int t);  // X = 0..s-1, Y = s..s+t-1
graph make_star(int n);                       // K_{1,n}: center 0, leaves 1..n
graph make_friendship(int n);                 // center 0, triangle i = {1+2i, 2+2i}
graph make_book(int n);                       // hubs 0,1; page i = {2i, 2i+1}
graph make_symmetric_tree(int h, int d);      // center 0, BFS layer order
graph make_bisymmetric_tree(int h, int d);    // central edge {0,1}, BFS layers
graph make_petersen();                        // outer 0..4, inner 5..9
graph make_subdivided_star(int n);            // center 0, branch i = 1+3i,2+3i,3+3i

}  // namespace disting
