#pragma once

#include <string>

#include "disting/graph.hpp"

namespace disting {

// Exact isomorphism test by backtracking with degree-based pruning.
// Intended for the small graphs handled in this project.
bool isomorphic(const graph& a, const graph& b);

// The connected graphs on which edge-symmetry transfer to the line graph
// breaks down in the classical statement handled here: the single edge, the
// paw (triangle with a pendant edge), and the diamond (K_4 minus an edge,
// which is the line graph of the paw).
enum class sabidussi_exception { none, p2, q, lq };

std::string to_string(sabidussi_exception e);

sabidussi_exception detect_sabidussi_exception(const graph& g);

}  // namespace disting
