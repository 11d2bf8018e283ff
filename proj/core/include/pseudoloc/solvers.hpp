#pragma once

#include <vector>

#include "pseudoloc/graph.hpp"
#include "pseudoloc/structure.hpp"

namespace pseudoloc {

// Adjacency-by-bitmask view used by the exact solvers. Unlike Graph it may be
// disconnected (strong resolving graphs often are) and carries no edge list.
struct MaskGraph {
  std::vector<VertexMask> adjacency;

  int order() const { return static_cast<int>(adjacency.size()); }

  static MaskGraph from_graph(const Graph& g);
  static MaskGraph from_edges(int n, const std::vector<Edge>& edges);
};

// The strong resolving graph relabelled onto 0..|boundary|-1 in boundary order.
MaskGraph sr_mask_graph(const StrongResolvingGraph& sr);

// Exact maximum independent set. Branches on a maximum-degree vertex, takes
// degree <= 1 vertices greedily, and memoizes on connected components.
VertexMask maximum_independent_set(const MaskGraph& h);
int independence_number(const MaskGraph& h);

// Exact minimum dominating set (N[D] = V) by branch and bound.
VertexMask minimum_dominating_set(const MaskGraph& h);
int domination_number(const MaskGraph& h);
int domination_number(const Graph& g);

}  // namespace pseudoloc
