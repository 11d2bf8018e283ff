#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "pseudoloc/graph.hpp"

namespace testing_support {

using pseudoloc::Edge;
using pseudoloc::Graph;

inline Graph make(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edge_list(n, edges);
}

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edge_list(n, edges);
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edge_list(n, edges);
}

// C_g on 0..g-1 with one pendant at each listed cycle vertex, pendants
// numbered g, g+1, ... in list order.
inline Graph cycle_with_pendants(int g, const std::vector<int>& at) {
  std::vector<Edge> edges;
  for (int i = 0; i < g; ++i) edges.push_back({i, (i + 1) % g});
  int next = g;
  for (int v : at) edges.push_back({v, next++});
  return Graph::from_edge_list(next, edges);
}

// Triangle 0-1-2 with pendant 3 at 0.
inline Graph paw() { return make(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }

// Centre 0 with legs 0-1, 0-2-3, 0-4-5.
inline Graph spider122() { return make(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}}); }

// C5 on 0..4, pendants 5-0 and 6-2.
inline Graph c5p13() { return make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {2, 6}}); }

// C4 on 0..3, pendant 4-0.
inline Graph c4p() { return cycle_with_pendants(4, {0}); }

// C4 with pendants at 0 and 1.
inline Graph c4pp() { return cycle_with_pendants(4, {0, 1}); }

inline Graph k13() { return make(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Girth 8 with five roots: two threads (at 1 and 6), two roots carrying two
// pendants each (0 and 3) and one root (4) with two strong exterior majors.
inline Graph figure1() {
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i) edges.push_back({i, (i + 1) % 8});
  const std::vector<std::pair<int, int>> extra = {
      {0, 8},   {0, 9},                                  // root 0
      {1, 10},                                           // thread at 1
      {3, 11},  {3, 12},                                 // root 3
      {4, 13},  {13, 14}, {13, 15}, {4, 16}, {16, 17}, {16, 18},  // root 4
      {6, 19},                                           // thread at 6
  };
  for (auto [u, v] : extra) edges.push_back({u, v});
  return Graph::from_edge_list(20, edges);
}

// C14 with a pendant at every cycle vertex except the antipodal pair 0, 7.
inline Graph figure4() {
  std::vector<int> at;
  for (int v = 1; v < 14; ++v)
    if (v != 7) at.push_back(v);
  return cycle_with_pendants(14, at);
}

}  // namespace testing_support
