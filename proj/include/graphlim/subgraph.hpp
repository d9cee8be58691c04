#ifndef GRAPHLIM_SUBGRAPH_HPP
#define GRAPHLIM_SUBGRAPH_HPP

#include "graphlim/graph.hpp"

#include <optional>
#include <vector>

namespace graphlim {

/// Injective vertex map realizing h as an induced subgraph of g, or
/// nullopt.  Exact backtracking; refuses patterns with more than 15
/// vertices rather than approximating.
std::optional<std::vector<int>> contains_induced(const Graph& h, const Graph& g);

/// Partition of V(g) into s cliques followed by t-s independent sets
/// (parts may be empty), or nullopt if impossible.  Exact backtracking;
/// refuses |V| > 20.
std::optional<VertexPartition> membership_cts(const Graph& g, int t, int s);

} // namespace graphlim

#endif
