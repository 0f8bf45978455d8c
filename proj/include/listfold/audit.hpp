#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "listfold/color.hpp"
#include "listfold/gadget.hpp"
#include "listfold/rational.hpp"
#include "listfold/solver.hpp"

namespace listfold {

/// Per-vertex, per-block color usage of a (possibly partial) coloring of H.
struct UsageProfile {
  int m = 1;
  std::vector<std::string> blocks;        // block names of the list universe
  std::vector<std::vector<int>> counts;   // counts[vertex][block]
  Rational tau{0};     // A-colors at y3, over m
  Rational sigma{0};   // C-colors at z4, over m
  /// |L(w)| minus the colors already used on w's neighbours.
  int available_w = 0;

  int count(Vertex v, std::string_view block) const;
};

UsageProfile usage_profile(const GadgetH& h, const MultiColoring& phi);

/// Which vertex blocks the C-colors of y2 and z2. The shipped transcription
/// uses x1 for both.
struct AuditConfig {
  std::string y2_blocker = "x1";
  std::string z2_blocker = "x1";
};

enum class CheckStatus { kPass, kFail, kSkipped };
std::string_view to_string(CheckStatus s);

struct AuditCheck {
  std::string name;
  std::string inequality;  // e.g. "tau >= 1 - 4 eps"
  Rational lhs{0};
  Rational rhs{0};
  CheckStatus status = CheckStatus::kSkipped;
};

enum class AuditVerdict {
  kConsistent,     // every check passes, w can still be colored
  kContradiction,  // all bounds hold and w is left with fewer than m colors
  kBoundViolated,  // a bound of the argument fails on this coloring
};
std::string_view to_string(AuditVerdict v);

struct AuditReport {
  int m = 1;
  int e = 0;
  Rational epsilon{0};  // e / m
  std::vector<AuditCheck> checks;
  int available_w = 0;
  /// 17 eps m - available_w: room left under the final bound.
  Rational slack{0};
  AuditVerdict verdict = AuditVerdict::kConsistent;

  const AuditCheck* find(std::string_view name) const;
};

/// Replays the counting argument on phi in its fixed order. phi may leave
/// vertices uncolored (empty sets); checks reading them are skipped. Throws
/// ColorError when phi is not a valid partial coloring.
AuditReport audit_chain(const GadgetH& h, const MultiColoring& phi, const AuditConfig& config = {});

/// The argument's bounds at (m, e), in colors unless noted.
struct ChainBounds {
  Rational epsilon{0};
  Rational tau_min{0};        // fraction of m
  Rational x2_b_min{0};
  Rational sigma_min{0};      // fraction of m
  Rational w_a_max{0};
  Rational w_c_max{0};
  Rational w_e_max{0};
  Rational w_total_max{0};
};

ChainBounds chain_bounds(int m, int e);

/// B-colors forced at x2 when y3 carries tau*m A-colors: (tau - eps) m.
Rational x2_b_lower_bound(int m, int e, Rational tau);

/// Exact identities behind the argument at m: tau_min + 4 eps + 4 = 5,
/// sigma_min + 12 eps + 4 = 5, 4 eps + 12 eps + eps = 17 eps, 17 eps < 1.
/// Returns the first failing identity, or an accepted result.
CheckResult chain_identities(int m);

struct ExhaustiveAudit {
  std::uint64_t colorings = 0;
  int max_available_w = 0;
  std::uint64_t contradictions = 0;
  std::uint64_t bound_violations = 0;
  bool complete = false;  // false when the budget ran out
};

/// Enumerates every valid coloring of H minus w and audits each one.
ExhaustiveAudit audit_exhaustive(const GadgetH& h, const Budget& budget = {}, const AuditConfig& config = {});

std::string audit_to_json(const AuditReport& report);
std::string audit_to_markdown(const AuditReport& report);

}  // namespace listfold
