#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pseudoloc/graph.hpp"

namespace pseudoloc {

// The nine set properties. MLD is metric-locating plus dominating.
struct Variant {
  enum class Kind { Metric, Doubly, Strong, Edge, Mixed, Local, KMetric, MLD };

  Kind kind = Kind::Metric;
  int k = 1;  // only meaningful for KMetric

  static constexpr Variant metric() { return {Kind::Metric, 1}; }
  static constexpr Variant doubly() { return {Kind::Doubly, 1}; }
  static constexpr Variant strong() { return {Kind::Strong, 1}; }
  static constexpr Variant edge() { return {Kind::Edge, 1}; }
  static constexpr Variant mixed() { return {Kind::Mixed, 1}; }
  static constexpr Variant local() { return {Kind::Local, 1}; }
  static constexpr Variant k_metric(int k) { return {Kind::KMetric, k}; }
  static constexpr Variant mld() { return {Kind::MLD, 1}; }

  friend bool operator==(const Variant&, const Variant&) = default;
};

std::string to_string(Variant v);

enum class Method { ClosedForm, BoundedByTheorem, BruteForce, SrGraphFormula };
std::string_view to_string(Method m);

struct Interval {
  int lo = 0;
  int hi = 0;

  bool contains(int x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// An exact value or a certified interval, plus where it came from.
struct ParameterResult {
  std::variant<int, Interval> value;
  std::optional<std::vector<Vertex>> witness;
  Method method = Method::ClosedForm;
  std::string theorem_tag;

  bool is_exact() const { return std::holds_alternative<int>(value); }
  int exact() const { return std::get<int>(value); }
  Interval bounds() const {
    return is_exact() ? Interval{exact(), exact()} : std::get<Interval>(value);
  }
  bool admits(int x) const { return bounds().contains(x); }
};

// Single-vertex and pairwise predicates on a distance matrix.
bool resolves(const DistanceMatrix& dm, Vertex v, Vertex x, Vertex y);
bool doubly_resolves(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex x, Vertex y);
bool strong_resolves(const DistanceMatrix& dm, Vertex w, Vertex x, Vertex y);
int edge_distance(const DistanceMatrix& dm, Vertex v, const Edge& e);

// Direct, definition-by-definition check. Slow but independent of the
// bitmask tables the brute-force search uses.
bool is_locating_set(const Graph& g, std::span<const Vertex> set, Variant variant);

// Precomputed per-pair resolver tables; accepts(S) answers the predicate for a
// packed subset in O(#pairs).
class LocatingChecker {
 public:
  LocatingChecker(const Graph& g, const DistanceMatrix& dm, Variant variant);

  bool accepts(VertexMask set) const;
  Variant variant() const { return variant_; }

 private:
  Variant variant_;
  VertexMask full_ = 0;
  std::vector<VertexMask> resolver_masks_;       // one per item pair
  std::vector<VertexMask> closed_neighborhoods_;  // MLD only
  // Doubly: for pair p and vertex u, the vertices whose distance difference
  // to the pair equals u's.
  std::vector<std::vector<VertexMask>> difference_classes_;
};

struct BruteForceCaps {
  int max_order = 16;
  int max_order_kmetric = 12;
};

// Minimum qualifying set, searching sizes in increasing order and
// lexicographically within a size; the witness is the first hit.
ParameterResult brute_force_dimension(const Graph& g, Variant variant, const BruteForceCaps& caps = {});

// Largest k for which a k-locating set exists: the smallest number of
// vertices resolving any single pair.
int k_dimensional_value(const Graph& g);
int k_dimensional_value(const Graph& g, const DistanceMatrix& dm);

}  // namespace pseudoloc
