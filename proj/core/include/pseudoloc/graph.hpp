#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pseudoloc/error.hpp"

namespace pseudoloc {

using Vertex = int;

// Vertex subsets are packed into one machine word; this is what caps the
// order of every graph the library handles.
using VertexMask = std::uint64_t;
inline constexpr int kMaxOrder = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline constexpr VertexMask full_mask(int n) { return n >= 64 ? ~VertexMask{0} : (bit(n) - 1); }
inline int popcount(VertexMask m) { return std::popcount(m); }
inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }

VertexMask to_mask(std::span<const Vertex> vertices);
std::vector<Vertex> to_vertices(VertexMask mask);

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple connected undirected graph on vertices 0..n-1.
class Graph {
 public:
  // Validates and canonicalizes the input: pairs may be given in either
  // orientation, the stored edge list is sorted with u < v.
  static Graph from_edge_list(int n, std::span<const Edge> pairs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  VertexMask neighbor_mask(Vertex v) const { return neighbor_masks_[v]; }
  VertexMask closed_neighbor_mask(Vertex v) const { return neighbor_masks_[v] | bit(v); }
  bool has_edge(Vertex u, Vertex v) const { return (neighbor_masks_[u] & bit(v)) != 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  int max_degree() const;
  int min_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexMask> neighbor_masks_;
  std::vector<Edge> edges_;
};

// Hop-count distances, row-major. Shares nothing with the graph it came from.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(Vertex u) const {
    return {data_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }
  int diameter() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> data_;
};

inline DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

struct CycleInfo {
  int girth = 0;
  // Starts at the smallest vertex id; the second entry is the smaller of its
  // two cycle neighbours.
  std::vector<Vertex> cycle;
};

// nullopt for trees; throws NotPseudotree when m > n.
std::optional<CycleInfo> girth_and_cycle(const Graph& g);

bool is_bipartite(const Graph& g);

bool is_connected(int n, std::span<const Edge> edges);

}  // namespace pseudoloc
