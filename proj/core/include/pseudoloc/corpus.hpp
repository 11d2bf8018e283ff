#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoloc/graph.hpp"

namespace pseudoloc {

enum class Family { Tree, Unicyclic, Cycle, Path };
std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

inline constexpr int kMaxTreeEnumeration = 12;
inline constexpr int kMaxUnicyclicEnumeration = 10;
inline constexpr int kMaxCanonicalOrder = 9;

struct CorpusSpec {
  Family family = Family::Tree;
  int max_n = 7;
  int min_n = 0;  // 0 picks the smallest order the family admits
  bool dedup = true;
  std::optional<std::uint64_t> seed;  // random mode when set
  std::optional<int> count;
};

using GraphSink = std::function<void(const Graph&)>;

// Prüfer decoding; the sequence has n-2 entries in [0, n).
Graph tree_from_pruefer(int n, std::span<const int> sequence);

// Labelled trees in lexicographic Prüfer order, or one representative per
// isomorphism class when dedup is set. Representatives are the canonical
// form for n <= 9 (emitted in graph6 order) and the first one generated above.
void enumerate_trees(int n, bool dedup, const GraphSink& sink);
std::vector<Graph> enumerate_trees(int n, bool dedup = true);

// Connected unicyclic graphs: trees plus one chord. Without dedup every
// labelled graph appears exactly once.
void enumerate_unicyclic(int n, bool dedup, const GraphSink& sink);
std::vector<Graph> enumerate_unicyclic(int n, bool dedup = true);

Graph path_graph(int n);
Graph cycle_graph(int n);

// Lexicographically least graph6 string over all relabelings (n <= 9).
std::string canonical_graph6(const Graph& g);
Graph canonical_form(const Graph& g);

// Isomorphism certificates used for deduplication at every size.
std::string tree_certificate(const Graph& g);
std::string unicyclic_certificate(const Graph& g);

// Portable sampling: the standard distributions are implementation-defined,
// so draws use rejection on the raw engine output.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

Graph random_tree(int n, SeededRng& rng);
Graph random_unicyclic(int n, SeededRng& rng);

// First sample of the seeded stream for spec.family at order spec.max_n.
Graph random_pseudotree(const CorpusSpec& spec);
// spec.count samples (default 1) from the same stream.
std::vector<Graph> random_pseudotrees(const CorpusSpec& spec);

// Every graph the corpus spec describes, in deterministic order.
void for_each_graph(const CorpusSpec& spec, const GraphSink& sink);

}  // namespace pseudoloc
