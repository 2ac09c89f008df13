#pragma once

#include <string>

#include "dessins/dessin.hpp"

namespace dessins {

/// Bipartite multigraph in Graphviz DOT: one filled node per cycle of sigma_x (b1, b2, ...),
/// one white node per cycle of sigma_y (w1, ...), one edge per dessin edge labelled with its
/// number. Fixed points count as cycles.
std::string export_dot(const Dessin &d);

} // namespace dessins
