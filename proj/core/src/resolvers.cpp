#include "pseudoloc/resolvers.hpp"

#include <algorithm>
#include <limits>

namespace pseudoloc {

std::string to_string(Variant v) {
  switch (v.kind) {
    case Variant::Kind::Metric: return "metric";
    case Variant::Kind::Doubly: return "doubly";
    case Variant::Kind::Strong: return "strong";
    case Variant::Kind::Edge: return "edge";
    case Variant::Kind::Mixed: return "mixed";
    case Variant::Kind::Local: return "local";
    case Variant::Kind::KMetric: return "kmetric(" + std::to_string(v.k) + ")";
    case Variant::Kind::MLD: return "mld";
  }
  return "unknown";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "ClosedForm";
    case Method::BoundedByTheorem: return "BoundedByTheorem";
    case Method::BruteForce: return "BruteForce";
    case Method::SrGraphFormula: return "SrGraphFormula";
  }
  return "Unknown";
}

bool resolves(const DistanceMatrix& dm, Vertex v, Vertex x, Vertex y) { return dm(x, v) != dm(y, v); }

bool doubly_resolves(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex x, Vertex y) {
  return dm(x, u) - dm(x, v) != dm(y, u) - dm(y, v);
}

bool strong_resolves(const DistanceMatrix& dm, Vertex w, Vertex x, Vertex y) {
  return dm(w, x) == dm(w, y) + dm(y, x) || dm(w, y) == dm(w, x) + dm(x, y);
}

int edge_distance(const DistanceMatrix& dm, Vertex v, const Edge& e) { return std::min(dm(v, e.u), dm(v, e.v)); }

namespace {

// Vertices first, then edges; vertex-to-edge distance generalizes
// vertex-to-vertex distance.
struct ItemUniverse {
  int vertex_count = 0;
  std::vector<Edge> edges;
  bool with_vertices = true;

  int size() const { return (with_vertices ? vertex_count : 0) + static_cast<int>(edges.size()); }
  int distance(const DistanceMatrix& dm, Vertex from, int item) const {
    if (with_vertices) {
      if (item < vertex_count) return dm(from, item);
      return edge_distance(dm, from, edges[item - vertex_count]);
    }
    return edge_distance(dm, from, edges[item]);
  }
};

bool every_pair_resolved(const DistanceMatrix& dm, std::span<const Vertex> set, const ItemUniverse& items) {
  for (int a = 0; a < items.size(); ++a) {
    for (int b = a + 1; b < items.size(); ++b) {
      bool ok = std::any_of(set.begin(), set.end(),
                            [&](Vertex s) { return items.distance(dm, s, a) != items.distance(dm, s, b); });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

bool is_locating_set(const Graph& g, std::span<const Vertex> set, Variant variant) {
  const DistanceMatrix dm(g);
  const int n = g.order();
  switch (variant.kind) {
    case Variant::Kind::Metric:
      return every_pair_resolved(dm, set, {n, {}, true});
    case Variant::Kind::Edge:
      return every_pair_resolved(dm, set, {n, g.edges(), false});
    case Variant::Kind::Mixed:
      return every_pair_resolved(dm, set, {n, g.edges(), true});
    case Variant::Kind::Local:
      for (const Edge& e : g.edges()) {
        if (std::none_of(set.begin(), set.end(), [&](Vertex s) { return resolves(dm, s, e.u, e.v); })) return false;
      }
      return true;
    case Variant::Kind::Strong:
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
          if (std::none_of(set.begin(), set.end(), [&](Vertex w) { return strong_resolves(dm, w, x, y); }))
            return false;
      return true;
    case Variant::Kind::Doubly:
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          bool ok = false;
          for (std::size_t i = 0; i < set.size() && !ok; ++i)
            for (std::size_t j = i + 1; j < set.size() && !ok; ++j)
              ok = doubly_resolves(dm, set[i], set[j], x, y);
          if (!ok) return false;
        }
      }
      return true;
    case Variant::Kind::KMetric:
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
          auto hits = std::count_if(set.begin(), set.end(), [&](Vertex s) { return resolves(dm, s, x, y); });
          if (hits < variant.k) return false;
        }
      return true;
    case Variant::Kind::MLD: {
      if (!every_pair_resolved(dm, set, {n, {}, true})) return false;
      VertexMask covered = 0;
      for (Vertex s : set) covered |= g.closed_neighbor_mask(s);
      return covered == full_mask(n);
    }
  }
  return false;
}

LocatingChecker::LocatingChecker(const Graph& g, const DistanceMatrix& dm, Variant variant)
    : variant_(variant), full_(full_mask(g.order())) {
  const int n = g.order();
  auto resolver_mask = [&](auto&& differs) {
    VertexMask m = 0;
    for (Vertex s = 0; s < n; ++s)
      if (differs(s)) m |= bit(s);
    return m;
  };
  auto build_item_masks = [&](const ItemUniverse& items) {
    for (int a = 0; a < items.size(); ++a)
      for (int b = a + 1; b < items.size(); ++b)
        resolver_masks_.push_back(
            resolver_mask([&](Vertex s) { return items.distance(dm, s, a) != items.distance(dm, s, b); }));
  };

  switch (variant.kind) {
    case Variant::Kind::Metric:
    case Variant::Kind::KMetric:
    case Variant::Kind::MLD:
      build_item_masks({n, {}, true});
      if (variant.kind == Variant::Kind::MLD)
        for (Vertex v = 0; v < n; ++v) closed_neighborhoods_.push_back(g.closed_neighbor_mask(v));
      break;
    case Variant::Kind::Edge:
      build_item_masks({n, g.edges(), false});
      break;
    case Variant::Kind::Mixed:
      build_item_masks({n, g.edges(), true});
      break;
    case Variant::Kind::Local:
      for (const Edge& e : g.edges())
        resolver_masks_.push_back(resolver_mask([&](Vertex s) { return resolves(dm, s, e.u, e.v); }));
      break;
    case Variant::Kind::Strong:
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
          resolver_masks_.push_back(resolver_mask([&](Vertex w) { return strong_resolves(dm, w, x, y); }));
      break;
    case Variant::Kind::Doubly:
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          std::vector<VertexMask> classes(n, 0);
          for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
              if (dm(x, u) - dm(y, u) == dm(x, v) - dm(y, v)) classes[u] |= bit(v);
          difference_classes_.push_back(std::move(classes));
        }
      }
      break;
  }
}

bool LocatingChecker::accepts(VertexMask set) const {
  switch (variant_.kind) {
    case Variant::Kind::Doubly: {
      if (set == 0) return difference_classes_.empty();
      // A pair fails when the distance difference is constant over the set.
      const Vertex first = lowest(set);
      for (const auto& classes : difference_classes_)
        if ((set & ~classes[first]) == 0) return false;
      return true;
    }
    case Variant::Kind::KMetric:
      for (VertexMask m : resolver_masks_)
        if (popcount(m & set) < variant_.k) return false;
      return true;
    case Variant::Kind::MLD: {
      VertexMask covered = 0;
      for (VertexMask s = set; s; s &= s - 1) covered |= closed_neighborhoods_[lowest(s)];
      if (covered != full_) return false;
      [[fallthrough]];
    }
    default:
      for (VertexMask m : resolver_masks_)
        if ((m & set) == 0) return false;
      return true;
  }
}

ParameterResult brute_force_dimension(const Graph& g, Variant variant, const BruteForceCaps& caps) {
  const int n = g.order();
  const int cap = variant.kind == Variant::Kind::KMetric ? caps.max_order_kmetric : caps.max_order;
  if (n > cap) {
    throw Error(ErrorKind::SizeCapExceeded,
                "brute force for " + to_string(variant) + " capped at n=" + std::to_string(cap) + ", got " + std::to_string(n));
  }
  if (variant.kind == Variant::Kind::KMetric && variant.k < 1) {
    throw Error(ErrorKind::KOutOfRange, "k must be positive");
  }

  const DistanceMatrix dm(g);
  const LocatingChecker checker(g, dm, variant);
  std::vector<int> idx;
  for (int size = 1; size <= n; ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexMask m = 0;
      for (int i : idx) m |= bit(i);
      if (checker.accepts(m)) {
        return {size, to_vertices(m), Method::BruteForce, "BRUTE_FORCE"};
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error(ErrorKind::KOutOfRange, "no " + to_string(variant) + " set exists");
}

int k_dimensional_value(const Graph& g) { return k_dimensional_value(g, DistanceMatrix(g)); }

int k_dimensional_value(const Graph& g, const DistanceMatrix& dm) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      int count = 0;
      for (Vertex v = 0; v < n; ++v) count += resolves(dm, v, x, y) ? 1 : 0;
      best = std::min(best, count);
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

}  // namespace pseudoloc
