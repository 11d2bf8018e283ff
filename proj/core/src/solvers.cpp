#include "pseudoloc/solvers.hpp"

#include <algorithm>
#include <unordered_map>

namespace pseudoloc {

MaskGraph MaskGraph::from_graph(const Graph& g) {
  MaskGraph h;
  h.adjacency.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) h.adjacency[v] = g.neighbor_mask(v);
  return h;
}

MaskGraph MaskGraph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n > kMaxOrder) throw Error(ErrorKind::SizeCapExceeded, "solver order " + std::to_string(n) + " exceeds cap");
  MaskGraph h;
  h.adjacency.assign(n, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw Error(ErrorKind::VertexOutOfRange, "solver edge out of range");
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "solver edge is a loop");
    h.adjacency[e.u] |= bit(e.v);
    h.adjacency[e.v] |= bit(e.u);
  }
  return h;
}

MaskGraph sr_mask_graph(const StrongResolvingGraph& sr) {
  std::vector<int> index(kMaxOrder, -1);
  for (std::size_t i = 0; i < sr.boundary.size(); ++i) index[sr.boundary[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  edges.reserve(sr.mmd_edges.size());
  for (const Edge& e : sr.mmd_edges) edges.push_back({index[e.u], index[e.v]});
  return MaskGraph::from_edges(static_cast<int>(sr.boundary.size()), edges);
}

namespace {

class IndependenceSolver {
 public:
  explicit IndependenceSolver(const MaskGraph& h) : adj_(h.adjacency) {}

  VertexMask solve(VertexMask avail) {
    if (avail == 0) return 0;
    if (auto it = memo_.find(avail); it != memo_.end()) return it->second;

    VertexMask result;
    VertexMask comp = component(avail);
    if (comp != avail) {
      result = solve(comp) | solve(avail & ~comp);
    } else {
      result = solve_connected(avail);
    }
    memo_.emplace(avail, result);
    return result;
  }

 private:
  VertexMask component(VertexMask avail) const {
    VertexMask seen = bit(lowest(avail));
    VertexMask frontier = seen;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adj_[lowest(f)];
      next &= avail;
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  VertexMask solve_connected(VertexMask avail) {
    Vertex pivot = -1;
    int pivot_degree = -1;
    for (VertexMask a = avail; a; a &= a - 1) {
      Vertex v = lowest(a);
      int d = popcount(adj_[v] & avail);
      // A vertex of degree <= 1 belongs to some maximum independent set.
      if (d <= 1) return bit(v) | solve(avail & ~(adj_[v] | bit(v)));
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    VertexMask with = bit(pivot) | solve(avail & ~(adj_[pivot] | bit(pivot)));
    VertexMask without = solve(avail & ~bit(pivot));
    return popcount(without) > popcount(with) ? without : with;
  }

  const std::vector<VertexMask>& adj_;
  std::unordered_map<VertexMask, VertexMask> memo_;
};

class DominationSolver {
 public:
  explicit DominationSolver(const MaskGraph& h) : n_(h.order()), full_(full_mask(h.order())) {
    closed_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v] = h.adjacency[v] | bit(v);
      max_cover_ = std::max(max_cover_, popcount(closed_[v]));
    }
  }

  VertexMask solve() {
    best_ = greedy();
    best_count_ = popcount(best_);
    search(0, 0, 0);
    return best_;
  }

 private:
  VertexMask greedy() const {
    VertexMask chosen = 0, dominated = 0;
    while (dominated != full_) {
      Vertex pick = -1;
      int gain = -1;
      for (Vertex v = 0; v < n_; ++v) {
        int g = popcount(closed_[v] & ~dominated);
        if (g > gain) {
          gain = g;
          pick = v;
        }
      }
      chosen |= bit(pick);
      dominated |= closed_[pick];
    }
    return chosen;
  }

  void search(VertexMask chosen, VertexMask dominated, int count) {
    if (dominated == full_) {
      if (count < best_count_) {
        best_ = chosen;
        best_count_ = count;
      }
      return;
    }
    int remaining = popcount(full_ & ~dominated);
    if (count + (remaining + max_cover_ - 1) / max_cover_ >= best_count_) return;

    // Branch on the undominated vertex with the fewest possible dominators.
    Vertex target = -1;
    int options = n_ + 1;
    for (VertexMask u = full_ & ~dominated; u; u &= u - 1) {
      Vertex v = lowest(u);
      int c = popcount(closed_[v]);
      if (c < options) {
        options = c;
        target = v;
      }
    }
    std::vector<std::pair<int, Vertex>> order;
    for (VertexMask c = closed_[target]; c; c &= c - 1) {
      Vertex w = lowest(c);
      order.emplace_back(-popcount(closed_[w] & ~dominated), w);
    }
    std::sort(order.begin(), order.end());
    for (auto [neg_gain, w] : order) search(chosen | bit(w), dominated | closed_[w], count + 1);
  }

  int n_;
  VertexMask full_;
  std::vector<VertexMask> closed_;
  int max_cover_ = 1;
  VertexMask best_ = 0;
  int best_count_ = 0;
};

}  // namespace

VertexMask maximum_independent_set(const MaskGraph& h) {
  if (h.order() > kMaxOrder) throw Error(ErrorKind::SizeCapExceeded, "independence solver cap");
  IndependenceSolver solver(h);
  return solver.solve(full_mask(h.order()));
}

int independence_number(const MaskGraph& h) { return popcount(maximum_independent_set(h)); }

VertexMask minimum_dominating_set(const MaskGraph& h) {
  if (h.order() > kMaxOrder) throw Error(ErrorKind::SizeCapExceeded, "domination solver cap");
  if (h.order() == 0) return 0;
  DominationSolver solver(h);
  return solver.solve();
}

int domination_number(const MaskGraph& h) { return popcount(minimum_dominating_set(h)); }

int domination_number(const Graph& g) { return domination_number(MaskGraph::from_graph(g)); }

}  // namespace pseudoloc
