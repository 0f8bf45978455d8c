#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "listfold/gadget.hpp"
#include "listfold/solver.hpp"

namespace listfold {

/// Outcome of comparing a run against what the construction predicts.
enum class ClaimStatus { kVerified, kRefuted, kInconclusive };
std::string_view to_string(ClaimStatus s);

/// UNSAT at the tight size and SAT at the loose size verifies; the opposite
/// verdict on either side refutes; a timeout is inconclusive.
ClaimStatus lemma1_status(const Lemma1Result& r);
ClaimStatus theorem1_status(const NonChoosabilityCertificate& c);

/// Certificates hold no timings, so equal runs serialise byte-identically.
std::string lemma1_certificate_json(const Lemma1Result& r);
std::string theorem1_certificate_json(const NonChoosabilityCertificate& c);
std::string theorem1_markdown(const NonChoosabilityCertificate& c);

/// Wall times and prune counters, kept out of the certificates.
std::string lemma1_stats_json(const Lemma1Result& r);
std::string theorem1_stats_json(const NonChoosabilityCertificate& c);

struct SweepRow {
  int m = 1;
  int e_size = 0;
  int list_size = 0;  // 3m + ceil(m/17) - 1
  Verdict tight = Verdict::kTimeout;
  Verdict loose = Verdict::kTimeout;
  double tight_ms = 0.0;
  double loose_ms = 0.0;
};

SweepRow sweep_row(const Lemma1Result& r);
/// Timings are emitted only when `with_timings` is set.
std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool with_timings);
std::string sweep_to_markdown(const std::vector<SweepRow>& rows, bool with_timings);

struct CertificateCheck {
  bool accepted = false;
  std::string kind;
  /// One line per re-validated item, e.g. "witness of loose side: ok".
  std::vector<std::string> log;
  std::string reason;  // first failure
};

/// Offline re-validation using only the construction code and the
/// independent coloring checker, never the solver: witnesses, list
/// reconstructions, relabeling bijections, counts and the exact eps identity.
/// UNSAT entries are accepted as search-attested.
CertificateCheck check_certificate(std::string_view json_text);

}  // namespace listfold
