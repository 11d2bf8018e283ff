#pragma once

#include <optional>
#include <string_view>

#include "pseudoloc/graph.hpp"
#include "pseudoloc/resolvers.hpp"
#include "pseudoloc/structure.hpp"

namespace pseudoloc {

enum class Parameter { Dmd, Dim, Sdim, Ddim, Dim2, Dimk, Edim, Mdim, Ldim };

inline constexpr Parameter kAllParameters[] = {Parameter::Dmd,  Parameter::Dim,  Parameter::Sdim,
                                               Parameter::Ddim, Parameter::Dim2, Parameter::Dimk,
                                               Parameter::Edim, Parameter::Mdim, Parameter::Ldim};

std::string_view to_string(Parameter p);
std::optional<Parameter> parse_parameter(std::string_view name);

// The brute-force variant whose minimum is the parameter.
Variant variant_for(Parameter p, int k = 0);

// Identifiers recorded in ParameterResult::theorem_tag.
namespace tags {
inline constexpr std::string_view kBruteForce = "BRUTE_FORCE";

inline constexpr std::string_view kDmdPath = "DMD_PATH";
inline constexpr std::string_view kDmdCycleOdd = "DMD_CYCLE_ODD";
inline constexpr std::string_view kDmdCycleEven = "DMD_CYCLE_EVEN";
inline constexpr std::string_view kDmdTree = "DMD_TREE";
inline constexpr std::string_view kDmdUnicOddAntipodal = "DMD_UNIC_ODD_ANTIPODAL";
inline constexpr std::string_view kDmdUnicOdd = "DMD_UNIC_ODD";
inline constexpr std::string_view kDmdUnicEvenTriple = "DMD_UNIC_EVEN_TRIPLE";
inline constexpr std::string_view kDmdUnicEvenOneRoot = "DMD_UNIC_EVEN_ONE_ROOT";
inline constexpr std::string_view kDmdUnicEven = "DMD_UNIC_EVEN";

inline constexpr std::string_view kDimPath = "DIM_PATH";
inline constexpr std::string_view kDimCycle = "DIM_CYCLE";
inline constexpr std::string_view kDimTree = "DIM_TREE";
inline constexpr std::string_view kDimOddRho0 = "DIM_ODD_RHO0";
inline constexpr std::string_view kDimOddRho1 = "DIM_ODD_RHO1";
inline constexpr std::string_view kDimOddAntipodal = "DIM_ODD_ANTIPODAL";
inline constexpr std::string_view kDimOddG3 = "DIM_ODD_G3";
inline constexpr std::string_view kDimEvenG4 = "DIM_EVEN_G4";
inline constexpr std::string_view kDimEvenG6 = "DIM_EVEN_G6";
inline constexpr std::string_view kDimEvenFewTrivial = "DIM_EVEN_RHO0_FEW_TRIVIAL";
inline constexpr std::string_view kDimEvenTriple = "DIM_EVEN_TRIPLE";
inline constexpr std::string_view kDimInterval = "DIM_INTERVAL";

inline constexpr std::string_view kSdimPath = "SDIM_PATH";
inline constexpr std::string_view kSdimCycle = "SDIM_CYCLE";
inline constexpr std::string_view kSdimTree = "SDIM_TREE";
inline constexpr std::string_view kSdimEvenExact = "SDIM_EVEN_EXACT";
inline constexpr std::string_view kSdimPartAlpha = "SDIM_PARTALPHA";

inline constexpr std::string_view kDdimTree = "DDIM_TREE";
inline constexpr std::string_view kDdimCycle = "DDIM_CYCLE";
inline constexpr std::string_view kDdimGNot346 = "DDIM_G_NOT_346";
inline constexpr std::string_view kDdimG346 = "DDIM_G_346";

inline constexpr std::string_view kDim2Path = "DIM2_PATH";
inline constexpr std::string_view kDim2Cycle = "DIM2_CYCLE";
inline constexpr std::string_view kDim2Tree = "DIM2_TREE";
inline constexpr std::string_view kDim2UnicBounds = "DIM2_UNIC_BOUNDS";

inline constexpr std::string_view kDimkPath = "DIMK_PATH";
inline constexpr std::string_view kDimkCycle = "DIMK_CYCLE";
inline constexpr std::string_view kDimkTree = "DIMK_TREE";
inline constexpr std::string_view kDimkUnicBounds = "DIMK_UNIC_BOUNDS";

inline constexpr std::string_view kEdimPath = "EDIM_PATH";
inline constexpr std::string_view kEdimCycle = "EDIM_CYCLE";
inline constexpr std::string_view kEdimTree = "EDIM_TREE";
inline constexpr std::string_view kEdimUnic = "EDIM_UNIC";

inline constexpr std::string_view kMdimPath = "MDIM_PATH";
inline constexpr std::string_view kMdimCycle = "MDIM_CYCLE";
inline constexpr std::string_view kMdimTree = "MDIM_TREE";
inline constexpr std::string_view kMdimUnic = "MDIM_UNIC";

inline constexpr std::string_view kLdimParity = "LDIM_PARITY";
}  // namespace tags

struct DispatchOptions {
  // dim2/dimk on proper unicyclic graphs have no closed form; with the oracle
  // allowed they delegate to brute force, otherwise they return bounds.
  bool allow_oracle = false;
  BruteForceCaps caps;
};

namespace closed_form {

ParameterResult dmd(const Graph& g, const PseudotreeProfile& p);
ParameterResult dim(const Graph& g, const PseudotreeProfile& p);

// Dispatcher: even proper unicyclic graphs take the fast path, odd ones the
// boundary formula.
ParameterResult sdim(const Graph& g, const PseudotreeProfile& p, const StrongResolvingGraph& sr);
// ℓ + r − 1 if t_ap ≥ 1, else ℓ + r. Requires a unicyclic graph of even girth.
ParameterResult sdim_even_exact(const PseudotreeProfile& p);
// |∂(G)| − α(G_SR), valid for every connected graph.
ParameterResult sdim_partalpha(const StrongResolvingGraph& sr);

ParameterResult ddim(const Graph& g, const PseudotreeProfile& p, int gamma);
ParameterResult dim2(const Graph& g, const PseudotreeProfile& p, const DispatchOptions& opts = {});
ParameterResult dimk(const Graph& g, const PseudotreeProfile& p, int k, const DispatchOptions& opts = {});
// known_dim, when exact, tightens the unicyclic interval.
ParameterResult edim(const Graph& g, const PseudotreeProfile& p, std::optional<int> known_dim = std::nullopt);
ParameterResult mdim(const Graph& g, const PseudotreeProfile& p);
ParameterResult ldim(const Graph& g, const PseudotreeProfile& p);

// Per-vertex quantities of the k-metric tree formula for a strong exterior
// major vertex w.
struct TerminalLegs {
  int ter = 0;    // number of terminal vertices
  int l = 0;      // shortest terminal leg
  int zeta = 0;   // sum of the two shortest terminal legs
};
TerminalLegs terminal_legs(const DistanceMatrix& dm, const PseudotreeProfile& p, Vertex w);
int i_r(const TerminalLegs& legs, int r);
// ζ(T): the k-dimensional value of a non-path tree.
int zeta(const DistanceMatrix& dm, const PseudotreeProfile& p);

}  // namespace closed_form

enum class ComputeMode { Auto, Closed, Brute };

// Single entry point used by the CLI. Auto runs the closed form and replaces
// an interval by the oracle value when the graph is within the caps. Exact
// results without a constructive witness get one from a search over sets of
// that size, when the search is small enough.
ParameterResult compute(const Graph& g, Parameter param, int k, ComputeMode mode, const BruteForceCaps& caps = {});

}  // namespace pseudoloc
