#include "pseudoloc/serialize.hpp"

namespace pseudoloc {

namespace {

Json vertex_map(const std::map<Vertex, std::vector<Vertex>>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

Json to_json(const PseudotreeProfile& p) {
  Json j;
  j["kind"] = std::string(to_string(p.kind));
  j["n"] = p.order;
  j["m"] = p.size;
  j["g"] = p.girth;
  j["l"] = p.l();
  j["lambda"] = p.lambda();
  j["l_s"] = p.l_s();
  j["lambda_s"] = p.lambda_s();
  j["s"] = p.s();
  j["rho"] = p.rho();
  j["c2"] = p.c2();
  j["c3"] = p.c3();
  j["r"] = p.antipodal_trivial_pairs;
  j["t_ap"] = p.antipodal_root_pairs;
  j["cycle"] = p.cycle;
  j["leaves"] = p.leaves;
  j["major"] = p.major;
  j["exterior_major"] = p.exterior_major;
  j["strong_exterior_major"] = p.strong_exterior_major;
  j["terminals"] = vertex_map(p.terminals);
  j["strong_leaves"] = p.strong_leaves;
  j["supports"] = p.supports;
  j["strong_supports"] = p.strong_supports;
  j["branch_active"] = p.branch_active;
  j["trivial"] = p.trivial;
  j["roots"] = p.roots;
  j["threads"] = vertex_map(p.threads);
  j["branching_trees"] = vertex_map(p.branching_trees);
  j["twin_pairs"] = edge_list(p.twin_pairs);
  return j;
}

Json to_json(const StrongResolvingGraph& sr) {
  Json j;
  j["boundary"] = sr.boundary;
  j["mmd_edges"] = edge_list(sr.mmd_edges);
  return j;
}

Json to_json(const ParameterResult& r) {
  Json j;
  if (r.is_exact()) {
    j["value"] = r.exact();
  } else {
    j["value"] = {r.bounds().lo, r.bounds().hi};
  }
  if (r.witness) j["witness"] = *r.witness;
  j["method"] = std::string(to_string(r.method));
  j["theorem_tag"] = r.theorem_tag;
  return j;
}

Json to_json(const ParameterResult& r, Parameter param, int k) {
  Json j;
  j["param"] = std::string(to_string(param));
  if (param == Parameter::Dimk) j["k"] = k;
  const Json body = to_json(r);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

}  // namespace pseudoloc
