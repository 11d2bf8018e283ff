#pragma once

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "pseudoloc/graph.hpp"

namespace pseudoloc {

enum class FamilyKind { Path, Cycle, Tree, ProperUnicyclic };

std::string_view to_string(FamilyKind kind);

// Most specific label: P_n is a Path (not Tree), C_g is a Cycle.
FamilyKind classify(const Graph& g);

inline bool is_tree_kind(FamilyKind k) { return k == FamilyKind::Path || k == FamilyKind::Tree; }

// Every statistic the location theorems condition on. All vertex lists are
// sorted ascending. Cycle-related fields are empty/zero for trees.
struct PseudotreeProfile {
  FamilyKind kind = FamilyKind::Path;
  int order = 0;
  int size = 0;
  int girth = 0;
  std::vector<Vertex> cycle;  // traversal order, see girth_and_cycle

  std::vector<Vertex> leaves;
  std::vector<Vertex> major;  // degree >= 3
  std::vector<Vertex> exterior_major;
  std::vector<Vertex> strong_exterior_major;
  std::vector<Vertex> strong_leaves;
  std::vector<Vertex> supports;
  std::vector<Vertex> strong_supports;
  std::map<Vertex, std::vector<Vertex>> terminals;  // exterior major -> Ter(w)

  // Unicyclic only.
  std::vector<Vertex> branch_active;
  std::vector<Vertex> trivial;  // C_2: cycle vertices with singleton branching tree
  std::vector<Vertex> roots;    // C_3: cycle vertices with non-trivial branching tree
  std::map<Vertex, std::vector<Vertex>> threads;          // root -> path away from it, root excluded
  std::map<Vertex, std::vector<Vertex>> branching_trees;  // cycle vertex -> V(T_v), v included
  int antipodal_trivial_pairs = 0;  // r
  int antipodal_root_pairs = 0;     // t in the even-girth sdim formula

  std::vector<Edge> twin_pairs;

  int l() const { return static_cast<int>(leaves.size()); }
  int lambda() const { return static_cast<int>(exterior_major.size()); }
  int lambda_s() const { return static_cast<int>(strong_exterior_major.size()); }
  int l_s() const { return static_cast<int>(strong_leaves.size()); }
  int s() const { return static_cast<int>(supports.size()); }
  int rho() const { return static_cast<int>(branch_active.size()); }
  int c2() const { return static_cast<int>(trivial.size()); }
  int c3() const { return static_cast<int>(roots.size()); }
  bool unicyclic() const { return girth > 0; }

  // Distance along the cycle; both vertices must lie on it.
  int cycle_distance(Vertex a, Vertex b) const;
  bool on_cycle(Vertex v) const { return v < static_cast<int>(cycle_index.size()) && cycle_index[v] >= 0; }

  std::vector<int> cycle_index;  // position in `cycle`, -1 off the cycle
};

PseudotreeProfile profile(const Graph& g);

bool geodesic_triple_exists(const PseudotreeProfile& p, std::span<const Vertex> subset);

// Pairs (a, b), a < b, at cycle distance floor(g/2). Odd-girth vertices have
// two antipodal partners.
std::vector<Edge> antipodal_pairs(const PseudotreeProfile& p, std::span<const Vertex> subset);

// Mutually-maximally-distant structure of a connected graph.
struct StrongResolvingGraph {
  std::vector<Vertex> boundary;  // sorted host ids
  std::vector<Edge> mmd_edges;   // host ids, sorted, u < v
};

bool mutually_maximally_distant(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v);
StrongResolvingGraph boundary_and_sr_graph(const Graph& g);
StrongResolvingGraph boundary_and_sr_graph(const Graph& g, const DistanceMatrix& dm);

struct Necklace {
  Graph graph;
  // Necklace vertex -> host vertex: cycle vertices map to themselves, each
  // pendant maps to the leaf of the branching tree it stands for.
  std::vector<Vertex> to_host;
};

// Every branching tree T_i is replaced by the star K_{1,l_i}, l_i = leaves of
// T_i other than i. Cycle vertices come first (cycle order), pendants after.
Necklace closed_necklace(const Graph& g);

}  // namespace pseudoloc
