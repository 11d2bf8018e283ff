#include "pseudoloc/structure.hpp"

#include <algorithm>
#include <limits>

namespace pseudoloc {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return "Path";
    case FamilyKind::Cycle: return "Cycle";
    case FamilyKind::Tree: return "Tree";
    case FamilyKind::ProperUnicyclic: return "ProperUnicyclic";
  }
  return "Unknown";
}

FamilyKind classify(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  if (m == n - 1) return g.max_degree() <= 2 ? FamilyKind::Path : FamilyKind::Tree;
  if (m == n) return g.max_degree() == 2 ? FamilyKind::Cycle : FamilyKind::ProperUnicyclic;
  throw Error(ErrorKind::NotPseudotree, "m=" + std::to_string(m) + " exceeds n=" + std::to_string(n));
}

int PseudotreeProfile::cycle_distance(Vertex a, Vertex b) const {
  int d = std::abs(cycle_index[a] - cycle_index[b]);
  return std::min(d, girth - d);
}

namespace {

int count_antipodal(const PseudotreeProfile& p, const std::vector<Vertex>& set) {
  int count = 0;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (p.cycle_distance(set[i], set[j]) == p.girth / 2) ++count;
  return count;
}

}  // namespace

PseudotreeProfile profile(const Graph& g) {
  PseudotreeProfile p;
  p.kind = classify(g);
  p.order = g.order();
  p.size = g.size();
  const int n = g.order();
  const DistanceMatrix dm(g);

  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) p.leaves.push_back(v);
    if (g.degree(v) >= 3) p.major.push_back(v);
  }

  // A leaf is terminal for the unique major vertex strictly closest to it.
  for (Vertex u : p.leaves) {
    int best = std::numeric_limits<int>::max();
    Vertex owner = -1;
    bool unique = false;
    for (Vertex w : p.major) {
      if (dm(u, w) < best) {
        best = dm(u, w);
        owner = w;
        unique = true;
      } else if (dm(u, w) == best) {
        unique = false;
      }
    }
    if (owner >= 0 && unique) p.terminals[owner].push_back(u);
  }
  for (auto& [w, ter] : p.terminals) {
    p.exterior_major.push_back(w);
    if (ter.size() >= 2) {
      p.strong_exterior_major.push_back(w);
      p.strong_leaves.insert(p.strong_leaves.end(), ter.begin(), ter.end());
    }
  }
  std::sort(p.strong_leaves.begin(), p.strong_leaves.end());

  const VertexMask leaf_mask = to_mask(p.leaves);
  for (Vertex v = 0; v < n; ++v) {
    int adjacent_leaves = popcount(g.neighbor_mask(v) & leaf_mask);
    if (adjacent_leaves >= 1) p.supports.push_back(v);
    if (adjacent_leaves >= 2) p.strong_supports.push_back(v);
  }

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      VertexMask others = ~(bit(u) | bit(v));
      if ((g.neighbor_mask(u) & others) == (g.neighbor_mask(v) & others)) p.twin_pairs.push_back({u, v});
    }
  }

  auto cycle = girth_and_cycle(g);
  if (!cycle) return p;

  p.girth = cycle->girth;
  p.cycle = cycle->cycle;
  p.cycle_index.assign(n, -1);
  for (int i = 0; i < p.girth; ++i) p.cycle_index[p.cycle[i]] = i;

  std::vector<Vertex> sorted_cycle = p.cycle;
  std::sort(sorted_cycle.begin(), sorted_cycle.end());
  for (Vertex v : sorted_cycle) {
    // T_v: component of G - E(C) containing v.
    VertexMask seen = bit(v);
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (p.on_cycle(y) || (seen & bit(y))) continue;
        seen |= bit(y);
        stack.push_back(y);
      }
    }
    auto members = to_vertices(seen);
    p.branching_trees[v] = members;

    if (members.size() == 1) {
      p.trivial.push_back(v);
      continue;
    }
    p.roots.push_back(v);

    bool branching = g.degree(v) >= 4;
    bool path_shaped = true;
    for (Vertex x : members) {
      if (x == v) continue;
      if (g.degree(x) >= 3) branching = true;
      if (g.degree(x) > 2) path_shaped = false;
    }
    if (branching) p.branch_active.push_back(v);

    if (path_shaped && g.degree(v) == 3) {
      std::vector<Vertex> thread;
      Vertex prev = v;
      Vertex cur = -1;
      for (Vertex y : g.neighbors(v))
        if (!p.on_cycle(y)) cur = y;
      while (cur >= 0) {
        thread.push_back(cur);
        Vertex next = -1;
        for (Vertex y : g.neighbors(cur))
          if (y != prev) next = y;
        prev = cur;
        cur = next;
      }
      p.threads[v] = thread;
    }
  }

  p.antipodal_trivial_pairs = count_antipodal(p, p.trivial);
  p.antipodal_root_pairs = count_antipodal(p, p.roots);
  return p;
}

bool geodesic_triple_exists(const PseudotreeProfile& p, std::span<const Vertex> subset) {
  if (!p.unicyclic()) return false;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      for (std::size_t k = j + 1; k < subset.size(); ++k) {
        int sum = p.cycle_distance(subset[i], subset[j]) + p.cycle_distance(subset[j], subset[k]) +
                  p.cycle_distance(subset[k], subset[i]);
        if (sum == p.girth) return true;
      }
  return false;
}

std::vector<Edge> antipodal_pairs(const PseudotreeProfile& p, std::span<const Vertex> subset) {
  std::vector<Edge> out;
  if (!p.unicyclic()) return out;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (p.cycle_distance(subset[i], subset[j]) == p.girth / 2)
        out.push_back({std::min(subset[i], subset[j]), std::max(subset[i], subset[j])});
  std::sort(out.begin(), out.end());
  return out;
}

bool mutually_maximally_distant(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v) {
  if (u == v) return false;
  for (Vertex w : g.neighbors(v))
    if (dm(u, w) > dm(u, v)) return false;
  for (Vertex w : g.neighbors(u))
    if (dm(v, w) > dm(v, u)) return false;
  return true;
}

StrongResolvingGraph boundary_and_sr_graph(const Graph& g) { return boundary_and_sr_graph(g, DistanceMatrix(g)); }

StrongResolvingGraph boundary_and_sr_graph(const Graph& g, const DistanceMatrix& dm) {
  StrongResolvingGraph sr;
  VertexMask boundary = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (mutually_maximally_distant(g, dm, u, v)) {
        sr.mmd_edges.push_back({u, v});
        boundary |= bit(u) | bit(v);
      }
    }
  }
  sr.boundary = to_vertices(boundary);
  return sr;
}

Necklace closed_necklace(const Graph& g) {
  const PseudotreeProfile p = profile(g);
  if (p.kind != FamilyKind::ProperUnicyclic) throw Error(ErrorKind::NotUnicyclic, "closed necklace needs a proper unicyclic graph");

  std::vector<Vertex> to_host(p.cycle.begin(), p.cycle.end());
  std::vector<Edge> edges;
  for (int i = 0; i < p.girth; ++i) edges.push_back({i, (i + 1) % p.girth});
  for (int i = 0; i < p.girth; ++i) {
    Vertex host = p.cycle[i];
    for (Vertex x : p.branching_trees.at(host)) {
      if (x == host || g.degree(x) != 1) continue;
      Vertex pendant = static_cast<Vertex>(to_host.size());
      to_host.push_back(x);
      edges.push_back({i, pendant});
    }
  }
  return {Graph::from_edge_list(static_cast<int>(to_host.size()), edges), std::move(to_host)};
}

}  // namespace pseudoloc
