#include "pseudoloc/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pseudoloc/graph_io.hpp"

namespace pseudoloc {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Tree: return "tree";
    case Family::Unicyclic: return "unicyclic";
    case Family::Cycle: return "cycle";
    case Family::Path: return "path";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Tree, Family::Unicyclic, Family::Cycle, Family::Path})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

Graph tree_from_pruefer(int n, std::span<const int> sequence) {
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2)
    throw Error(ErrorKind::InvalidArgument, "Pruefer sequence length must be n-2");
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw Error(ErrorKind::VertexOutOfRange, "Pruefer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : sequence) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "a cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Graph::from_edge_list(n, edges);
}

// ---- canonical form --------------------------------------------------------

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), pos_(n_), current_(bits(n_)) {}

  std::vector<Vertex> run() {
    place(0, 0);
    return best_pos_;
  }

  const std::vector<char>& best_bits() const { return best_; }

 private:
  static std::size_t bits(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

  bool twins(Vertex u, Vertex v) const {
    VertexMask others = ~(bit(u) | bit(v));
    return (g_.neighbor_mask(u) & others) == (g_.neighbor_mask(v) & others);
  }

  void place(int depth, VertexMask used) {
    if (depth == n_) {
      if (best_.empty() || current_ < best_) {
        best_ = current_;
        best_pos_ = pos_;
      }
      return;
    }
    const std::size_t offset = bits(depth);
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (used & bit(v)) continue;
      // Swapping unplaced twins is an automorphism fixing the prefix.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      for (int i = 0; i < depth; ++i) current_[offset + i] = g_.has_edge(pos_[i], v) ? 1 : 0;
      if (!best_.empty() && std::lexicographical_compare(best_.begin(), best_.begin() + offset + depth,
                                                         current_.begin(), current_.begin() + offset + depth))
        continue;
      pos_[depth] = v;
      place(depth + 1, used | bit(v));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> pos_;
  std::vector<char> current_;
  std::vector<char> best_;
  std::vector<Vertex> best_pos_;
};

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw Error(ErrorKind::SizeCapExceeded, "canonical form is limited to n <= " + std::to_string(kMaxCanonicalOrder));
  CanonicalSearch search(g);
  const std::vector<Vertex> pos = search.run();
  std::vector<Vertex> label(g.order());
  for (int i = 0; i < g.order(); ++i) label[pos[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({std::min(label[e.u], label[e.v]), std::max(label[e.u], label[e.v])});
  return Graph::from_edge_list(g.order(), edges);
}

std::string canonical_graph6(const Graph& g) { return encode_graph6(canonical_form(g)); }

// ---- isomorphism certificates ----------------------------------------------

namespace {

// AHU encoding of the subtree hanging from v, never entering `blocked`.
std::string rooted_code(const Graph& g, Vertex v, Vertex parent, VertexMask blocked) {
  std::vector<std::string> children;
  for (Vertex w : g.neighbors(v)) {
    if (w == parent || (blocked & bit(w))) continue;
    children.push_back(rooted_code(g, w, v, blocked));
  }
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  code += ')';
  return code;
}

}  // namespace

std::string tree_certificate(const Graph& g) {
  const int n = g.order();
  if (n == 1) return "()";
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : g.neighbors(v))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = rooted_code(g, c, -1, 0);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::string unicyclic_certificate(const Graph& g) {
  const auto info = girth_and_cycle(g);
  if (!info) throw Error(ErrorKind::NotUnicyclic, "certificate needs a unicyclic graph");
  const auto& cycle = info->cycle;
  const int len = static_cast<int>(cycle.size());
  const VertexMask on_cycle = to_mask(cycle);
  std::vector<std::string> codes;
  for (Vertex c : cycle) codes.push_back(rooted_code(g, c, -1, on_cycle & ~bit(c)));

  std::string best;
  for (int dir : {1, -1}) {
    for (int start = 0; start < len; ++start) {
      std::string s;
      for (int i = 0; i < len; ++i) {
        s += codes[((start + dir * i) % len + len) % len];
        s += '|';
      }
      if (best.empty() || s < best) best = s;
    }
  }
  return best;
}

// ---- enumeration -----------------------------------------------------------

namespace {

void emit_classes(int n, std::vector<Graph> reps, const GraphSink& sink) {
  if (n <= kMaxCanonicalOrder) {
    std::vector<std::pair<std::string, Graph>> canon;
    canon.reserve(reps.size());
    for (const Graph& g : reps) {
      Graph c = canonical_form(g);
      canon.emplace_back(encode_graph6(c), std::move(c));
    }
    std::sort(canon.begin(), canon.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [code, g] : canon) sink(g);
  } else {
    for (const Graph& g : reps) sink(g);
  }
}

// One representative per class, in generation order.
std::vector<Graph> tree_classes(int n) {
  std::vector<Graph> level{Graph::from_edge_list(1, {})};
  for (int m = 2; m <= n; ++m) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const Graph& t : level) {
      for (Vertex v = 0; v < m - 1; ++v) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({v, m - 1});
        Graph grown = Graph::from_edge_list(m, edges);
        if (seen.insert(tree_certificate(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

void check_tree_order(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "tree enumeration needs n >= 2");
  if (n > kMaxTreeEnumeration)
    throw Error(ErrorKind::SizeCapExceeded, "tree enumeration is limited to n <= " + std::to_string(kMaxTreeEnumeration));
}

void check_unicyclic_order(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "unicyclic enumeration needs n >= 3");
  if (n > kMaxUnicyclicEnumeration)
    throw Error(ErrorKind::SizeCapExceeded,
                "unicyclic enumeration is limited to n <= " + std::to_string(kMaxUnicyclicEnumeration));
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn) {
  std::vector<int> seq(n - 2, 0);
  while (true) {
    fn(tree_from_pruefer(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

// Tree edges on the u-v path.
std::vector<Edge> tree_path(const Graph& t, Vertex u, Vertex v) {
  std::vector<Vertex> parent(t.order(), -1);
  std::vector<Vertex> queue{u};
  parent[u] = u;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex w : t.neighbors(queue[i]))
      if (parent[w] < 0) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
  std::vector<Edge> path;
  for (Vertex x = v; x != u; x = parent[x]) path.push_back({std::min(x, parent[x]), std::max(x, parent[x])});
  return path;
}

Graph add_chord(const Graph& t, Edge chord) {
  std::vector<Edge> edges = t.edges();
  edges.push_back(chord);
  return Graph::from_edge_list(t.order(), edges);
}

}  // namespace

void enumerate_trees(int n, bool dedup, const GraphSink& sink) {
  check_tree_order(n);
  if (dedup) {
    emit_classes(n, tree_classes(n), sink);
  } else {
    for_each_labeled_tree(n, sink);
  }
}

std::vector<Graph> enumerate_trees(int n, bool dedup) {
  std::vector<Graph> out;
  enumerate_trees(n, dedup, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void enumerate_unicyclic(int n, bool dedup, const GraphSink& sink) {
  check_unicyclic_order(n);
  if (dedup) {
    std::vector<Graph> reps;
    std::set<std::string> seen;
    for (const Graph& t : tree_classes(n)) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          if (t.has_edge(u, v)) continue;
          Graph g = add_chord(t, {u, v});
          if (seen.insert(unicyclic_certificate(g)).second) reps.push_back(std::move(g));
        }
    }
    emit_classes(n, std::move(reps), sink);
    return;
  }
  // Each labelled unicyclic graph G arises once: from G - e and e, where e is
  // the largest edge on its cycle.
  for_each_labeled_tree(n, [&](const Graph& t) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (t.has_edge(u, v)) continue;
        const Edge chord{u, v};
        const auto path = tree_path(t, u, v);
        if (std::all_of(path.begin(), path.end(), [&](const Edge& e) { return e < chord; })) sink(add_chord(t, chord));
      }
  });
}

std::vector<Graph> enumerate_unicyclic(int n, bool dedup) {
  std::vector<Graph> out;
  enumerate_unicyclic(n, dedup, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---- random sampling -------------------------------------------------------

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "empty sampling range");
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return x % bound;
}

Graph random_tree(int n, SeededRng& rng) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "tree order must be positive");
  if (n > kMaxOrder) throw Error(ErrorKind::SizeCapExceeded, "order exceeds " + std::to_string(kMaxOrder));
  if (n == 1) return Graph::from_edge_list(1, {});
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = static_cast<int>(rng.below(n));
  return tree_from_pruefer(n, seq);
}

Graph random_unicyclic(int n, SeededRng& rng) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "unicyclic order must be at least 3");
  Graph t = random_tree(n, rng);
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!t.has_edge(u, v)) non_edges.push_back({u, v});
  return add_chord(t, non_edges[rng.below(non_edges.size())]);
}

std::vector<Graph> random_pseudotrees(const CorpusSpec& spec) {
  if (!spec.seed) throw Error(ErrorKind::InvalidArgument, "random sampling needs a seed");
  SeededRng rng(*spec.seed);
  const int count = spec.count.value_or(1);
  std::vector<Graph> out;
  out.reserve(std::max(count, 0));
  for (int i = 0; i < count; ++i) {
    switch (spec.family) {
      case Family::Tree: out.push_back(random_tree(spec.max_n, rng)); break;
      case Family::Unicyclic: out.push_back(random_unicyclic(spec.max_n, rng)); break;
      case Family::Path: out.push_back(path_graph(spec.max_n)); break;
      case Family::Cycle: out.push_back(cycle_graph(spec.max_n)); break;
    }
  }
  return out;
}

Graph random_pseudotree(const CorpusSpec& spec) {
  CorpusSpec one = spec;
  one.count = 1;
  return random_pseudotrees(one).front();
}

void for_each_graph(const CorpusSpec& spec, const GraphSink& sink) {
  if (spec.seed) {
    for (const Graph& g : random_pseudotrees(spec)) sink(g);
    return;
  }
  const int smallest = spec.family == Family::Unicyclic || spec.family == Family::Cycle ? 3 : 2;
  const int lo = std::max(spec.min_n, smallest);
  switch (spec.family) {
    case Family::Tree:
      if (spec.max_n >= lo) check_tree_order(spec.max_n);
      for (int n = lo; n <= spec.max_n; ++n) enumerate_trees(n, spec.dedup, sink);
      break;
    case Family::Unicyclic:
      if (spec.max_n >= lo) check_unicyclic_order(spec.max_n);
      for (int n = lo; n <= spec.max_n; ++n) enumerate_unicyclic(n, spec.dedup, sink);
      break;
    case Family::Path:
      for (int n = lo; n <= spec.max_n; ++n) sink(path_graph(n));
      break;
    case Family::Cycle:
      for (int n = lo; n <= spec.max_n; ++n) sink(cycle_graph(n));
      break;
  }
}

}  // namespace pseudoloc
