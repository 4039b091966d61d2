#pragma once

#include "disting/graph.hpp"

namespace disting {

// Vertex layout conventions (tests and bound certificates rely on them):
//
// join(g, h):       g keeps its indices, h is shifted by |V(g)|, and every
//                   g-vertex is adjacent to every h-vertex.
// corona(g, h):     g keeps its indices 0..n-1; copy i of h (attached to
//                   g-vertex i) occupies n + i*m .. n + (i+1)*m - 1.
// cartesian_product(g, h): vertex (u, a) becomes u*|V(h)| + a; edges join
//                   pairs equal in one coordinate and adjacent in the other.
// line_graph(g):    one vertex per edge of g, numbered by g's canonical edge
//                   indices; two vertices adjacent iff the edges share an
//                   endpoint.  Requires at least one edge.
graph join(const graph& g, const graph& h);
graph corona(const graph& g, const graph& h);
graph cartesian_product(const graph& g, const graph& h);
graph line_graph(const graph& g);

}  // namespace disting
