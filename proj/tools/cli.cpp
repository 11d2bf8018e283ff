#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <iostream>
#include <optional>
#include <sstream>

#include "pseudoloc/closed_form.hpp"
#include "pseudoloc/corpus.hpp"
#include "pseudoloc/error.hpp"
#include "pseudoloc/graph_io.hpp"
#include "pseudoloc/serialize.hpp"
#include "pseudoloc/structure.hpp"
#include "pseudoloc/verify.hpp"

namespace pseudoloc::cli {
namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPseudotree:
    case ErrorKind::NotUnicyclic:
      return kNotPseudotree;
    case ErrorKind::SizeCapExceeded:
      return kSizeCap;
    case ErrorKind::KOutOfRange:
      return kKOutOfRange;
    default:
      return kParseError;
  }
}

// Raised for bad flag combinations the parser cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BruteForceCaps caps_from_env() {
  BruteForceCaps caps;
  const char* raw = std::getenv("PSEUDOLOC_MAX_N");
  if (!raw || !*raw) return caps;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > kMaxOrder) throw UsageError(std::string("bad PSEUDOLOC_MAX_N: ") + raw);
  caps.max_order = caps.max_order_kmetric = static_cast<int>(v);
  return caps;
}

std::string join(const std::vector<Vertex>& vs, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(vs[i]);
  }
  return s;
}

std::string human(const ParameterResult& r) {
  std::string s;
  if (r.is_exact()) {
    s = std::to_string(r.exact());
  } else {
    const Interval b = r.bounds();
    s = "[" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "]";
  }
  s += " method=" + std::string(to_string(r.method)) + " tag=" + r.theorem_tag;
  if (r.witness) s += " witness=" + join(*r.witness);
  return s;
}

std::string human(const PseudotreeProfile& p) {
  std::ostringstream os;
  os << "kind=" << to_string(p.kind) << " n=" << p.order << " m=" << p.size << " g=" << p.girth << " l=" << p.l()
     << " lambda=" << p.lambda() << " l_s=" << p.l_s() << " lambda_s=" << p.lambda_s() << " s=" << p.s();
  if (p.unicyclic()) {
    os << " rho=" << p.rho() << " c2=" << p.c2() << " c3=" << p.c3() << " r=" << p.antipodal_trivial_pairs
       << " t_ap=" << p.antipodal_root_pairs << " cycle=" << join(p.cycle);
  }
  return os.str();
}

Json with_graph6(const Graph& g, const Json& body) {
  Json j;
  j["graph6"] = encode_graph6(g);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

struct InputFlags {
  std::string file;
  std::string graph;
  std::string format = "graph6";
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  auto* file = cmd->add_option("--input,-i", in.file, "Read graphs from a file ('-' for stdin)");
  auto* inline_graph = cmd->add_option("--graph,-g", in.graph, "A single graph6 string");
  file->excludes(inline_graph);
  cmd->add_option("--format,-f", in.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
}

// Calls fn once per input graph. Errors on one graph are reported and the
// loop continues; the first failure decides the exit code.
template <typename Fn>
int for_each_input(const InputFlags& flags, std::istream& in, std::ostream& err, Fn&& fn) {
  std::string text;
  bool have_text = false;
  std::istream* src = &in;
  std::ifstream file;
  if (!flags.graph.empty()) {
    text = flags.graph;
    have_text = true;
  } else if (!flags.file.empty() && flags.file != "-") {
    file.open(flags.file);
    if (!file) {
      err << "error: cannot open " << flags.file << "\n";
      return kParseError;
    }
    src = &file;
  }

  int status = kOk;
  auto run_one = [&](auto&& parse) {
    try {
      fn(parse());
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      if (status == kOk) status = exit_code_for(e.kind());
    }
  };

  if (flags.format == "edgelist") {
    if (!have_text) {
      std::ostringstream buf;
      buf << src->rdbuf();
      text = buf.str();
    }
    run_one([&] { return parse_edge_list(text); });
    return status;
  }

  std::istringstream inline_stream(text);
  std::istream& lines = have_text ? static_cast<std::istream&>(inline_stream) : *src;
  std::string line;
  bool any = false;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    any = true;
    run_one([&] { return parse_graph6(line); });
  }
  if (!any) {
    err << "error: no input graphs\n";
    return kParseError;
  }
  return status;
}

std::vector<Parameter> parse_parameter_list(const std::string& raw) {
  if (raw == "all") return {std::begin(kAllParameters), std::end(kAllParameters)};
  std::vector<Parameter> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto p = parse_parameter(item);
    if (!p) throw UsageError("unknown parameter '" + item + "'");
    if (std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
  }
  if (out.empty()) throw UsageError("empty parameter list");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric-location parameters of pseudotrees", "pseudoloc"};
  app.require_subcommand(1);
  bool json = false;

  // compute
  auto* compute_cmd = app.add_subcommand("compute", "Compute one parameter");
  InputFlags compute_in;
  add_input_flags(compute_cmd, compute_in);
  std::string param_name;
  std::optional<int> k;
  std::string method = "auto";
  compute_cmd->add_option("--param,-p", param_name, "dmd|dim|sdim|ddim|dim2|dimk|edim|mdim|ldim")->required();
  compute_cmd->add_option("--k", k, "k for dimk");
  compute_cmd->add_option("--method,-m", method, "auto|closed|brute")
      ->check(CLI::IsMember({"auto", "closed", "brute"}));
  compute_cmd->add_flag("--json", json, "One JSON object per output line");

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "Structural profile");
  InputFlags profile_in;
  add_input_flags(profile_cmd, profile_in);
  profile_cmd->add_flag("--json", json, "One JSON object per output line");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against the oracles over a corpus");
  std::string family_name;
  CorpusSpec spec;
  std::string params_raw = "all";
  int jobs = 1;
  std::string report_path;
  bool labeled = false;
  bool no_invariants = false;
  std::optional<std::uint64_t> verify_seed;
  std::optional<int> verify_count;
  verify_cmd->add_option("--family", family_name, "tree|unicyclic|cycle|path")->required();
  verify_cmd->add_option("--max-n", spec.max_n, "Largest order")->required();
  verify_cmd->add_option("--min-n", spec.min_n, "Smallest order (default: family minimum)");
  verify_cmd->add_option("--params", params_raw, "Comma list or 'all'");
  verify_cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--report", report_path, "JSONL report path ('-' for stdout)");
  verify_cmd->add_flag("--labeled", labeled, "Every labelled graph instead of one per class");
  verify_cmd->add_flag("--no-invariants", no_invariants, "Skip the structural invariants");
  verify_cmd->add_option("--seed", verify_seed, "Random corpus of --count graphs at order --max-n");
  verify_cmd->add_option("--count", verify_count, "Sample count for --seed")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", json, "One JSON object per output line");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Sample graphs as graph6");
  std::string kind_name;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  int gen_count = 1;
  gen_cmd->add_option("--kind", kind_name, "tree|unicyclic|cycle|path")->required();
  gen_cmd->add_option("--n", gen_n, "Order")->required();
  gen_cmd->add_option("--seed", gen_seed, "Seed");
  gen_cmd->add_option("--count", gen_count, "Number of graphs")->check(CLI::NonNegativeNumber);
  gen_cmd->add_flag("--json", json, "One JSON object per output line");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    const BruteForceCaps caps = caps_from_env();

    if (*compute_cmd) {
      const auto param = parse_parameter(param_name);
      if (!param) throw UsageError("unknown parameter '" + param_name + "'");
      if (*param == Parameter::Dimk && !k) throw UsageError("--param dimk needs --k");
      if (*param != Parameter::Dimk && k) throw UsageError("--k only applies to dimk");
      const ComputeMode mode = method == "closed" ? ComputeMode::Closed
                               : method == "brute" ? ComputeMode::Brute
                                                   : ComputeMode::Auto;
      const int kk = k.value_or(0);
      return for_each_input(compute_in, in, err, [&](const Graph& g) {
        const ParameterResult r = compute(g, *param, kk, mode, caps);
        if (json)
          out << with_graph6(g, to_json(r, *param, kk)).dump() << '\n';
        else
          out << encode_graph6(g) << ' ' << to_string(*param) << '=' << human(r) << '\n';
      });
    }

    if (*profile_cmd) {
      return for_each_input(profile_in, in, err, [&](const Graph& g) {
        const PseudotreeProfile p = profile(g);
        if (json)
          out << with_graph6(g, to_json(p)).dump() << '\n';
        else
          out << encode_graph6(g) << ' ' << human(p) << '\n';
      });
    }

    if (*verify_cmd) {
      const auto family = parse_family(family_name);
      if (!family) throw UsageError("unknown family '" + family_name + "'");
      spec.family = *family;
      spec.dedup = !labeled;
      spec.seed = verify_seed;
      spec.count = verify_count;
      if (verify_count && !verify_seed) throw UsageError("--count needs --seed");

      VerifyOptions opts;
      opts.parameters = parse_parameter_list(params_raw);
      opts.jobs = jobs;
      opts.caps = caps;
      opts.invariants = !no_invariants;
      check_verify_caps(spec, opts);

      std::ofstream report_file;
      std::ostream* report = nullptr;
      if (report_path == "-") {
        report = &out;
      } else if (!report_path.empty()) {
        report_file.open(report_path);
        if (!report_file) throw UsageError("cannot write " + report_path);
        report = &report_file;
      }
      const VerifySummary s = verify_corpus(spec, opts, report);
      // The report owns stdout when it is written there.
      std::ostream& summary_out = report == &out ? err : out;
      if (json) {
        if (report != &out) summary_out << to_json(s).dump() << '\n';
      } else {
        summary_out << "graphs=" << s.graphs << " records=" << s.records << " agree=" << s.agree
                    << " in_bounds=" << s.in_bounds << " violations=" << s.violations
                    << " invariant_checks=" << s.invariant_checks
                    << " invariant_violations=" << s.invariant_violations << '\n';
      }
      return s.total_violations() == 0 ? kOk : kViolations;
    }

    if (*gen_cmd) {
      const auto family = parse_family(kind_name);
      if (!family) throw UsageError("unknown kind '" + kind_name + "'");
      const int min_n = (*family == Family::Tree || *family == Family::Path) ? 2 : 3;
      if (gen_n < min_n || gen_n > kMaxOrder) {
        err << "error: " << kind_name << " order must lie in [" << min_n << ", " << kMaxOrder << "]\n";
        return kSizeCap;
      }
      CorpusSpec gs;
      gs.family = *family;
      gs.max_n = gen_n;
      gs.seed = gen_seed;
      gs.count = gen_count;
      if (gen_count == 0) return kOk;
      for (const Graph& g : random_pseudotrees(gs)) {
        if (json) {
          Json j;
          j["graph6"] = encode_graph6(g);
          j["n"] = g.order();
          j["m"] = g.size();
          out << j.dump() << '\n';
        } else {
          out << encode_graph6(g) << '\n';
        }
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kParseError;
}

}  // namespace pseudoloc::cli
