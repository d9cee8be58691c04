#ifndef GRAPHLIM_PLANARITY_HPP
#define GRAPHLIM_PLANARITY_HPP

#include "graphlim/graph.hpp"

namespace graphlim {

/// Exact planarity test (Demoucron face-by-face embedding, applied per
/// biconnected block).
bool is_planar(const Graph& g);

/// Outerplanarity via the apex reduction: g is outerplanar iff g plus a
/// vertex adjacent to everything is planar.
bool is_outerplanar(const Graph& g);

} // namespace graphlim

#endif
