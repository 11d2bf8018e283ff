#include "pseudoloc/closed_form.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "pseudoloc/solvers.hpp"

namespace pseudoloc {

namespace {

constexpr std::array<std::pair<Parameter, std::string_view>, 9> kParameterNames{{
    {Parameter::Dmd, "dmd"},
    {Parameter::Dim, "dim"},
    {Parameter::Sdim, "sdim"},
    {Parameter::Ddim, "ddim"},
    {Parameter::Dim2, "dim2"},
    {Parameter::Dimk, "dimk"},
    {Parameter::Edim, "edim"},
    {Parameter::Mdim, "mdim"},
    {Parameter::Ldim, "ldim"},
}};

}  // namespace

std::string_view to_string(Parameter p) {
  for (auto [param, name] : kParameterNames)
    if (param == p) return name;
  return "unknown";
}

std::optional<Parameter> parse_parameter(std::string_view name) {
  for (auto [param, known] : kParameterNames)
    if (known == name) return param;
  return std::nullopt;
}

Variant variant_for(Parameter p, int k) {
  switch (p) {
    case Parameter::Dmd: return Variant::doubly();
    case Parameter::Dim: return Variant::metric();
    case Parameter::Sdim: return Variant::strong();
    case Parameter::Ddim: return Variant::mld();
    case Parameter::Dim2: return Variant::k_metric(2);
    case Parameter::Dimk: return Variant::k_metric(k);
    case Parameter::Edim: return Variant::edge();
    case Parameter::Mdim: return Variant::mixed();
    case Parameter::Ldim: return Variant::local();
  }
  throw Error(ErrorKind::InvalidArgument, "unknown parameter");
}

namespace closed_form {

namespace {

ParameterResult exact(int value, std::string_view tag, std::optional<std::vector<Vertex>> witness = std::nullopt,
                      Method method = Method::ClosedForm) {
  return {value, std::move(witness), method, std::string(tag)};
}

ParameterResult bounded(int lo, int hi, std::string_view tag) {
  return {Interval{lo, hi}, std::nullopt, Method::BoundedByTheorem, std::string(tag)};
}

void require_order(const PseudotreeProfile& p) {
  if (p.order < 2) throw Error(ErrorKind::InvalidArgument, "closed forms need at least two vertices");
}

int rho_hat(const PseudotreeProfile& p) { return std::max(2 - p.rho(), 0); }

// First set, in lexicographic order, of `extra` vertices outside `base` that
// completes it to a set with the given property. Gives up on large searches.
std::optional<std::vector<Vertex>> complete(const Graph& g, std::vector<Vertex> base, int extra, Variant variant) {
  const int n = g.order();
  const VertexMask base_mask = to_mask(base);
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v)
    if (!(base_mask & bit(v))) pool.push_back(v);
  if (extra < 0 || extra > static_cast<int>(pool.size())) return std::nullopt;

  double combos = 1;
  for (int i = 0; i < extra; ++i) combos = combos * (pool.size() - i) / (i + 1);
  if (combos > 50000) return std::nullopt;

  const DistanceMatrix dm(g);
  const LocatingChecker checker(g, dm, variant);
  std::vector<int> idx(extra);
  for (int i = 0; i < extra; ++i) idx[i] = i;
  const int m = static_cast<int>(pool.size());
  while (true) {
    VertexMask mask = base_mask;
    for (int i : idx) mask |= bit(pool[i]);
    if (checker.accepts(mask)) return to_vertices(mask);
    int i = extra - 1;
    while (i >= 0 && idx[i] == m - extra + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < extra; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// All terminal vertices except the largest-id one of each exterior major vertex.
std::vector<Vertex> leaves_but_one_per_major(const PseudotreeProfile& p) {
  std::vector<Vertex> out;
  for (const auto& [w, ter] : p.terminals) {
    auto sorted = ter;
    std::sort(sorted.begin(), sorted.end());
    out.insert(out.end(), sorted.begin(), sorted.end() - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> sorted_pair(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

bool has_antipodal_pair(const PseudotreeProfile& p, const std::vector<Vertex>& set) {
  return !antipodal_pairs(p, set).empty();
}

}  // namespace

ParameterResult dmd(const Graph& g, const PseudotreeProfile& p) {
  require_order(p);
  const int l = p.l();
  switch (p.kind) {
    case FamilyKind::Path: return exact(2, tags::kDmdPath, p.leaves);
    case FamilyKind::Tree: return exact(l, tags::kDmdTree, p.leaves);
    case FamilyKind::Cycle: {
      const int half = p.girth / 2;
      if (p.girth % 2 == 1) return exact(2, tags::kDmdCycleOdd, sorted_pair(p.cycle[0], p.cycle[half]));
      std::vector<Vertex> w{p.cycle[0], p.cycle[1], p.cycle[half]};
      std::sort(w.begin(), w.end());
      return exact(3, tags::kDmdCycleEven, w);
    }
    case FamilyKind::ProperUnicyclic: break;
  }
  int value;
  std::string_view tag;
  if (p.girth % 2 == 1) {
    const bool antipodal = has_antipodal_pair(p, p.roots);
    value = antipodal ? l : l + 1;
    tag = antipodal ? tags::kDmdUnicOddAntipodal : tags::kDmdUnicOdd;
  } else if (geodesic_triple_exists(p, p.roots)) {
    value = l;
    tag = tags::kDmdUnicEvenTriple;
  } else if (p.c3() == 1) {
    value = l + 2;
    tag = tags::kDmdUnicEvenOneRoot;
  } else {
    value = l + 1;
    tag = tags::kDmdUnicEven;
  }
  return exact(value, tag, complete(g, p.leaves, value - l, Variant::doubly()));
}

ParameterResult dim(const Graph& g, const PseudotreeProfile& p) {
  require_order(p);
  const int base = p.l() - p.lambda();
  switch (p.kind) {
    case FamilyKind::Path: return exact(1, tags::kDimPath, std::vector<Vertex>{p.leaves.front()});
    case FamilyKind::Tree: return exact(base, tags::kDimTree, leaves_but_one_per_major(p));
    case FamilyKind::Cycle: return exact(2, tags::kDimCycle, sorted_pair(p.cycle[0], p.cycle[1]));
    case FamilyKind::ProperUnicyclic: break;
  }
  (void)g;
  const int rho = p.rho();
  const int target = base + rho_hat(p);
  if (p.girth % 2 == 1) {
    if (rho == 0) return exact(2, tags::kDimOddRho0);
    if (rho == 1) return exact(base + 1, tags::kDimOddRho1);
    if (has_antipodal_pair(p, p.branch_active)) return exact(base, tags::kDimOddAntipodal);
    if (p.girth == 3) return exact(base, tags::kDimOddG3);
    return bounded(target, target + 1, tags::kDimInterval);
  }
  if (rho == 0) {
    if (p.girth == 4) return exact(2, tags::kDimEvenG4);
    if (p.girth == 6) return exact(p.c2() != 0 ? 2 : 3, tags::kDimEvenG6);
    if (p.c2() <= 1) return exact(3, tags::kDimEvenFewTrivial);
  }
  if (rho >= 3 && geodesic_triple_exists(p, p.branch_active)) return exact(base, tags::kDimEvenTriple);
  return bounded(target, target + 1, tags::kDimInterval);
}

ParameterResult sdim_even_exact(const PseudotreeProfile& p) {
  if (!p.unicyclic() || p.girth % 2 != 0)
    throw Error(ErrorKind::NotUnicyclic, "even-girth strong dimension formula needs an even unicyclic graph");
  const int l = p.l();
  const int r = p.antipodal_trivial_pairs;
  return exact(p.antipodal_root_pairs >= 1 ? l + r - 1 : l + r, tags::kSdimEvenExact);
}

ParameterResult sdim_partalpha(const StrongResolvingGraph& sr) {
  const MaskGraph h = sr_mask_graph(sr);
  const VertexMask independent = maximum_independent_set(h);
  std::vector<Vertex> cover;
  for (int i = 0; i < h.order(); ++i)
    if (!(independent & bit(i))) cover.push_back(sr.boundary[i]);
  const int value = h.order() - popcount(independent);
  return exact(value, tags::kSdimPartAlpha, cover, Method::SrGraphFormula);
}

ParameterResult sdim(const Graph& g, const PseudotreeProfile& p, const StrongResolvingGraph& sr) {
  require_order(p);
  (void)g;
  switch (p.kind) {
    case FamilyKind::Path: return exact(1, tags::kSdimPath, std::vector<Vertex>{p.leaves.front()});
    case FamilyKind::Tree: {
      std::vector<Vertex> w(p.leaves.begin(), p.leaves.end() - 1);
      return exact(p.l() - 1, tags::kSdimTree, w);
    }
    case FamilyKind::Cycle: {
      const int value = (p.girth + 1) / 2;
      std::vector<Vertex> w(p.cycle.begin(), p.cycle.begin() + value);
      std::sort(w.begin(), w.end());
      return exact(value, tags::kSdimCycle, w);
    }
    case FamilyKind::ProperUnicyclic: break;
  }
  ParameterResult alpha_route = sdim_partalpha(sr);
  if (p.girth % 2 == 1) return alpha_route;
  ParameterResult fast = sdim_even_exact(p);
  if (alpha_route.exact() == fast.exact()) fast.witness = alpha_route.witness;
  return fast;
}

ParameterResult ddim(const Graph& g, const PseudotreeProfile& p, int gamma) {
  require_order(p);
  (void)g;
  const bool small_girth = p.girth == 3 || p.girth == 4 || p.girth == 6;
  const int base = gamma + p.l() - static_cast<int>(p.supports.size());
  switch (p.kind) {
    case FamilyKind::Path:
    case FamilyKind::Tree: return exact(base, tags::kDdimTree);
    case FamilyKind::Cycle:
      if (small_girth) return bounded(base, base + 1, tags::kDdimG346);
      return exact((p.girth + 2) / 3, tags::kDdimCycle);
    case FamilyKind::ProperUnicyclic:
      if (small_girth) return bounded(base, base + 1, tags::kDdimG346);
      return exact(base, tags::kDdimGNot346);
  }
  return bounded(base, base + 1, tags::kDdimG346);
}

namespace {

// dim_k of C_n for 2 ≤ k ≤ kdim(C_n).
int cycle_dimk(int n, int k) { return (n % 2 == 0 && 2 * k >= n && k <= n - 2) ? k + 2 : k + 1; }

ParameterResult delegate_or_bound(const Graph& g, int k, int lo, std::string_view tag, const DispatchOptions& opts) {
  if (opts.allow_oracle && g.order() <= opts.caps.max_order_kmetric)
    return brute_force_dimension(g, Variant::k_metric(k), opts.caps);
  return bounded(lo, g.order(), tag);
}

}  // namespace

ParameterResult dim2(const Graph& g, const PseudotreeProfile& p, const DispatchOptions& opts) {
  require_order(p);
  switch (p.kind) {
    case FamilyKind::Path: return exact(2, tags::kDim2Path, p.leaves);
    case FamilyKind::Cycle: return exact(cycle_dimk(p.girth, 2), tags::kDim2Cycle);
    case FamilyKind::Tree: return exact(p.l_s(), tags::kDim2Tree);
    case FamilyKind::ProperUnicyclic: break;
  }
  return delegate_or_bound(g, 2, 3, tags::kDim2UnicBounds, opts);
}

TerminalLegs terminal_legs(const DistanceMatrix& dm, const PseudotreeProfile& p, Vertex w) {
  TerminalLegs legs;
  auto it = p.terminals.find(w);
  if (it == p.terminals.end()) return legs;
  std::vector<int> lengths;
  for (Vertex u : it->second) lengths.push_back(dm(u, w));
  std::sort(lengths.begin(), lengths.end());
  legs.ter = static_cast<int>(lengths.size());
  legs.l = lengths.front();
  legs.zeta = lengths.size() >= 2 ? lengths[0] + lengths[1] : 0;
  return legs;
}

int i_r(const TerminalLegs& legs, int r) {
  if (legs.l <= r / 2) return (legs.ter - 1) * (r - legs.l) + legs.l;
  return (legs.ter - 1) * ((r + 1) / 2) + r / 2;
}

int zeta(const DistanceMatrix& dm, const PseudotreeProfile& p) {
  int best = std::numeric_limits<int>::max();
  for (Vertex w : p.strong_exterior_major) best = std::min(best, terminal_legs(dm, p, w).zeta);
  if (best == std::numeric_limits<int>::max())
    throw Error(ErrorKind::InvalidArgument, "zeta needs a tree with a strong exterior major vertex");
  return best;
}

ParameterResult dimk(const Graph& g, const PseudotreeProfile& p, int k, const DispatchOptions& opts) {
  require_order(p);
  const DistanceMatrix dm(g);
  const int kdim = k_dimensional_value(g, dm);
  if (k < 2 || k > kdim) {
    throw Error(ErrorKind::KOutOfRange,
                "k=" + std::to_string(k) + " outside [2, " + std::to_string(kdim) + "]");
  }
  switch (p.kind) {
    case FamilyKind::Path: return exact(k == 2 ? 2 : k + 1, tags::kDimkPath);
    case FamilyKind::Cycle: return exact(cycle_dimk(p.girth, k), tags::kDimkCycle);
    case FamilyKind::Tree: {
      int total = 0;
      for (Vertex w : p.strong_exterior_major) total += i_r(terminal_legs(dm, p, w), k);
      return exact(total, tags::kDimkTree);
    }
    case FamilyKind::ProperUnicyclic: break;
  }
  return delegate_or_bound(g, k, k + 1, tags::kDimkUnicBounds, opts);
}

ParameterResult edim(const Graph& g, const PseudotreeProfile& p, std::optional<int> known_dim) {
  require_order(p);
  switch (p.kind) {
    case FamilyKind::Path: return exact(1, tags::kEdimPath, std::vector<Vertex>{p.leaves.front()});
    case FamilyKind::Cycle: return exact(2, tags::kEdimCycle, sorted_pair(p.cycle[0], p.cycle[1]));
    case FamilyKind::Tree: return exact(p.l() - p.lambda(), tags::kEdimTree, leaves_but_one_per_major(p));
    case FamilyKind::ProperUnicyclic: break;
  }
  (void)g;
  int lo = p.l() - p.lambda() + rho_hat(p);
  int hi = lo + 1;
  if (known_dim) {
    // Odd girth: dim ≤ edim ≤ dim + 1. Even girth: dim − 1 ≤ edim ≤ dim.
    const int d = *known_dim;
    lo = std::max(lo, p.girth % 2 == 1 ? d : d - 1);
    hi = std::min(hi, p.girth % 2 == 1 ? d + 1 : d);
  }
  if (lo > hi) {
    // The supplied dim contradicts the bounds; keep the unrefined interval.
    lo = p.l() - p.lambda() + rho_hat(p);
    hi = lo + 1;
  }
  if (lo == hi) return exact(lo, tags::kEdimUnic);
  return bounded(lo, hi, tags::kEdimUnic);
}

ParameterResult mdim(const Graph& g, const PseudotreeProfile& p) {
  require_order(p);
  switch (p.kind) {
    case FamilyKind::Path: return exact(2, tags::kMdimPath, p.leaves);
    case FamilyKind::Tree: return exact(p.l(), tags::kMdimTree, p.leaves);
    case FamilyKind::Cycle: return exact(3, tags::kMdimCycle, complete(g, {}, 3, Variant::mixed()));
    case FamilyKind::ProperUnicyclic: break;
  }
  const int t = p.c3();
  const int epsilon = (t >= 3 && !geodesic_triple_exists(p, p.roots)) ? 1 : 0;
  const int extra = std::max(3 - t, 0) + epsilon;
  return exact(p.l() + extra, tags::kMdimUnic, complete(g, p.leaves, extra, Variant::mixed()));
}

ParameterResult ldim(const Graph& g, const PseudotreeProfile& p) {
  require_order(p);
  if (is_bipartite(g)) return exact(1, tags::kLdimParity, std::vector<Vertex>{0});
  return exact(2, tags::kLdimParity, sorted_pair(p.cycle[0], p.cycle[1]));
}

}  // namespace closed_form

ParameterResult compute(const Graph& g, Parameter param, int k, ComputeMode mode, const BruteForceCaps& caps) {
  const PseudotreeProfile p = profile(g);
  if (param == Parameter::Dimk) {
    const int kdim = k_dimensional_value(g);
    if (k < 2 || k > kdim)
      throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(k) + " outside [2, " + std::to_string(kdim) + "]");
  }
  if (mode == ComputeMode::Brute) return brute_force_dimension(g, variant_for(param, k), caps);

  const DispatchOptions opts{mode == ComputeMode::Auto, caps};
  ParameterResult result;
  switch (param) {
    case Parameter::Dmd: result = closed_form::dmd(g, p); break;
    case Parameter::Dim: result = closed_form::dim(g, p); break;
    case Parameter::Sdim: result = closed_form::sdim(g, p, boundary_and_sr_graph(g)); break;
    case Parameter::Ddim: result = closed_form::ddim(g, p, domination_number(g)); break;
    case Parameter::Dim2: result = closed_form::dim2(g, p, opts); break;
    case Parameter::Dimk: result = closed_form::dimk(g, p, k, opts); break;
    case Parameter::Edim: {
      const ParameterResult d = closed_form::dim(g, p);
      result = closed_form::edim(g, p, d.is_exact() ? std::optional<int>(d.exact()) : std::nullopt);
      break;
    }
    case Parameter::Mdim: result = closed_form::mdim(g, p); break;
    case Parameter::Ldim: result = closed_form::ldim(g, p); break;
  }

  const Variant v = variant_for(param, k);
  if (mode == ComputeMode::Auto && !result.is_exact()) {
    const int cap = v.kind == Variant::Kind::KMetric ? caps.max_order_kmetric : caps.max_order;
    if (g.order() <= cap) return brute_force_dimension(g, v, caps);
  }
  if (result.is_exact() && !result.witness) {
    // Theorems that only give the value: search sets of exactly that size,
    // seeded with the leaves every basis must contain when that applies.
    if (param == Parameter::Dim || param == Parameter::Edim) {
      const auto forced = closed_form::leaves_but_one_per_major(p);
      result.witness = closed_form::complete(g, forced, result.exact() - static_cast<int>(forced.size()), v);
    }
    if (!result.witness) result.witness = closed_form::complete(g, {}, result.exact(), v);
  }
  return result;
}

}  // namespace pseudoloc
