#include "pseudoloc/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace pseudoloc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorKind::NotPseudotree: return "NotPseudotree";
    case ErrorKind::NotUnicyclic: return "NotUnicyclic";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

VertexMask to_mask(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= bit(v);
  return m;
}

std::vector<Vertex> to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  out.reserve(popcount(mask));
  while (mask) {
    out.push_back(lowest(mask));
    mask &= mask - 1;
  }
  return out;
}

bool is_connected(int n, std::span<const Edge> edges) {
  if (n <= 1) return true;
  std::vector<VertexMask> nb(n, 0);
  for (const Edge& e : edges) {
    nb[e.u] |= bit(e.v);
    nb[e.v] |= bit(e.u);
  }
  VertexMask seen = bit(0);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= nb[lowest(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full_mask(n);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "graph needs at least one vertex");
  if (n > kMaxOrder) {
    throw Error(ErrorKind::SizeCapExceeded, "order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  }
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(n, {});
  g.neighbor_masks_.assign(n, 0);
  g.edges_.reserve(pairs.size());
  for (Edge e : pairs) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (g.neighbor_masks_[e.u] & bit(e.v)) {
      throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " listed twice");
    }
    g.neighbor_masks_[e.u] |= bit(e.v);
    g.neighbor_masks_[e.v] |= bit(e.u);
    g.edges_.push_back(e);
  }
  if (!is_connected(n, g.edges_)) throw Error(ErrorKind::Disconnected, "input graph is not connected");
  std::sort(g.edges_.begin(), g.edges_.end());
  for (Vertex v = 0; v < n; ++v) g.adjacency_[v] = to_vertices(g.neighbor_masks_[v]);
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adjacency_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

int Graph::min_degree() const {
  int best = n_;
  for (const auto& a : adjacency_) best = std::min(best, static_cast<int>(a.size()));
  return best;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), data_(static_cast<std::size_t>(n_) * n_, -1) {
  std::vector<Vertex> queue(n_);
  for (Vertex s = 0; s < n_; ++s) {
    int* row = data_.data() + static_cast<std::size_t>(s) * n_;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
}

int DistanceMatrix::diameter() const { return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end()); }

std::optional<CycleInfo> girth_and_cycle(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  if (m > n) throw Error(ErrorKind::NotPseudotree, "graph has " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
  if (m < n) return std::nullopt;

  // Peel leaves until only the cycle is left.
  std::vector<int> deg(n);
  std::deque<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  std::vector<bool> removed(n, false);
  while (!leaves.empty()) {
    Vertex v = leaves.front();
    leaves.pop_front();
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
    }
  }

  Vertex start = 0;
  while (removed[start]) ++start;
  auto on_cycle_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
      if (!removed[w]) out.push_back(w);
    return out;
  };

  CycleInfo info;
  info.cycle.push_back(start);
  Vertex prev = start;
  Vertex cur = on_cycle_neighbors(start).front();  // neighbours are sorted
  while (cur != start) {
    info.cycle.push_back(cur);
    auto nb = on_cycle_neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  info.girth = static_cast<int>(info.cycle.size());
  return info;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace pseudoloc
