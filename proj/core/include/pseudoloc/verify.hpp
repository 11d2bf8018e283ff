#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pseudoloc/closed_form.hpp"
#include "pseudoloc/corpus.hpp"
#include "pseudoloc/serialize.hpp"

namespace pseudoloc {

enum class Status { Agree, InBounds, Violation };
std::string_view to_string(Status s);

struct VerificationRecord {
  std::string graph6;
  Parameter parameter = Parameter::Dim;
  int k = 0;  // dimk only
  ParameterResult closed;
  ParameterResult oracle;
  Status status = Status::Agree;
  std::string theorem_tag;
  std::string note;  // why a violation was raised, when not a plain mismatch
};

Json to_json(const VerificationRecord& r);

// A structural or oracle-backed property that failed on one graph.
struct InvariantViolation {
  std::string graph6;
  std::string invariant;
  std::string detail;
};

Json to_json(const InvariantViolation& v);

struct VerifyOptions {
  std::vector<Parameter> parameters;  // dimk expands to every valid k
  int jobs = 1;
  BruteForceCaps caps;
  bool invariants = true;
};

struct VerifySummary {
  long graphs = 0;
  long records = 0;
  long agree = 0;
  long in_bounds = 0;
  long violations = 0;
  long invariant_checks = 0;
  long invariant_violations = 0;

  long total_violations() const { return violations + invariant_violations; }
};

Json to_json(const VerifySummary& s);

// Per-graph work, exposed for tests.
struct GraphVerification {
  std::vector<VerificationRecord> records;
  std::vector<InvariantViolation> invariant_violations;
  long invariant_checks = 0;
};
GraphVerification verify_graph(const Graph& g, const VerifyOptions& opts);

// Streams one JSON line per record (and per invariant violation) to `report`
// in corpus order, followed by a summary line. Output does not depend on jobs.
VerifySummary verify_corpus(const CorpusSpec& spec, const VerifyOptions& opts, std::ostream* report = nullptr,
                            std::vector<VerificationRecord>* records = nullptr);

// Throws SizeCapExceeded when the corpus exceeds what the oracles accept.
void check_verify_caps(const CorpusSpec& spec, const VerifyOptions& opts);

}  // namespace pseudoloc
