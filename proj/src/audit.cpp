#include "listfold/audit.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <sstream>

#include "listfold/json_io.hpp"

namespace listfold {

int UsageProfile::count(Vertex v, std::string_view block) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b] == block) return counts[v][b];
  }
  return 0;
}

UsageProfile usage_profile(const GadgetH& h, const MultiColoring& phi) {
  const auto& u = h.lists.universe();
  UsageProfile p;
  p.m = h.params.m;
  for (const auto& b : u.blocks()) p.blocks.push_back(b.name);
  p.counts.assign(h.graph.order(), std::vector<int>(u.block_count(), 0));
  for (Vertex v = 0; v < h.graph.order(); ++v) {
    for (ColorId c : phi.phi.at(v)) ++p.counts[v][u.block_of(c)];
  }
  const Vertex y3 = h.graph.at_role("y3");
  const Vertex z4 = h.graph.at_role("z4");
  const Vertex w = h.graph.at_role("w");
  p.tau = Rational(p.count(y3, "A"), p.m);
  p.sigma = Rational(p.count(z4, "C"), p.m);

  ColorSet blocked;
  for (Vertex n : h.graph.neighbors(w)) blocked.insert(blocked.end(), phi.phi[n].begin(), phi.phi[n].end());
  blocked = make_color_set(std::move(blocked));
  for (ColorId c : h.lists.list(w)) p.available_w += std::binary_search(blocked.begin(), blocked.end(), c) ? 0 : 1;
  return p;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::string_view to_string(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::kConsistent: return "consistent";
    case AuditVerdict::kContradiction: return "contradiction";
    case AuditVerdict::kBoundViolated: return "bound-violated";
  }
  return "?";
}

const AuditCheck* AuditReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ChainBounds chain_bounds(int m, int e) {
  ChainBounds b;
  b.epsilon = Rational(e, m);
  const Rational eps = b.epsilon;
  b.tau_min = 1 - 4 * eps;
  b.x2_b_min = (1 - 5 * eps) * m;
  b.sigma_min = 1 - 12 * eps;
  b.w_a_max = 4 * eps * m;
  b.w_c_max = 12 * eps * m;
  b.w_e_max = eps * m;
  b.w_total_max = 17 * eps * m;
  return b;
}

Rational x2_b_lower_bound(int m, int e, Rational tau) { return (tau - Rational(e, m)) * m; }

CheckResult chain_identities(int m) {
  const FoldParams p = FoldParams::of(m);
  const ChainBounds b = chain_bounds(m, p.e_size);
  const Rational eps = b.epsilon;
  if (eps * m != p.e_size) return {false, "eps*m != ceil(m/17) - 1 at m=" + std::to_string(m)};
  if (b.tau_min + 4 * eps + 4 != 5) return {false, "tau + 4 eps + 4 = 5 fails at m=" + std::to_string(m)};
  if (b.sigma_min + 12 * eps + 4 != 5) return {false, "sigma + 12 eps + 4 = 5 fails at m=" + std::to_string(m)};
  if (b.w_a_max + b.w_c_max + b.w_e_max != b.w_total_max) {
    return {false, "4 eps m + 12 eps m + eps m != 17 eps m at m=" + std::to_string(m)};
  }
  if (x2_b_lower_bound(m, p.e_size, b.tau_min) != b.x2_b_min) {
    return {false, "x2 bound at tau_min differs from (1 - 5 eps) m at m=" + std::to_string(m)};
  }
  if (!(17 * eps < 1)) return {false, "17 eps < 1 fails at m=" + std::to_string(m)};
  if (!(b.w_total_max < m)) return {false, "17 eps m < m fails at m=" + std::to_string(m)};
  return {true, {}};
}

namespace {

class ChainAuditor {
 public:
  ChainAuditor(const GadgetH& h, const MultiColoring& phi) : h_(h), phi_(phi), u_(h.lists.universe()) {}

  Vertex at(std::string_view role) const { return h_.graph.at_role(role); }
  bool colored(std::string_view role) const { return !phi_.phi[at(role)].empty(); }

  int uses(std::string_view role, std::initializer_list<std::string_view> blocks) const {
    int n = 0;
    for (ColorId c : phi_.phi[at(role)]) {
      const std::string& name = u_.block(u_.block_of(c)).name;
      for (auto b : blocks) n += name == b ? 1 : 0;
    }
    return n;
  }

  /// Highest number of cycle vertices sharing one color of `blocks`.
  int max_cycle_reuse(std::initializer_list<std::string_view> cycle,
                      std::initializer_list<std::string_view> blocks) const {
    std::map<ColorId, int> seen;
    for (auto role : cycle) {
      for (ColorId c : phi_.phi[at(role)]) {
        const std::string& name = u_.block(u_.block_of(c)).name;
        for (auto b : blocks) {
          if (name == b) ++seen[c];
        }
      }
    }
    int best = 0;
    for (const auto& [c, n] : seen) best = std::max(best, n);
    return best;
  }

  /// Colors of `block` in L(w) not used on any neighbour of w.
  int available_at_w(std::string_view block) const {
    const Vertex w = at("w");
    ColorSet blocked;
    for (Vertex n : h_.graph.neighbors(w)) blocked.insert(blocked.end(), phi_.phi[n].begin(), phi_.phi[n].end());
    blocked = make_color_set(std::move(blocked));
    int n = 0;
    for (ColorId c : h_.lists.list(w)) {
      if (!block.empty() && u_.block(u_.block_of(c)).name != block) continue;
      n += std::binary_search(blocked.begin(), blocked.end(), c) ? 0 : 1;
    }
    return n;
  }

 private:
  const GadgetH& h_;
  const MultiColoring& phi_;
  const ColorUniverse& u_;
};

AuditCheck at_least(std::string name, std::string ineq, Rational lhs, Rational rhs, bool ready) {
  return {std::move(name), std::move(ineq), lhs, rhs,
          ready ? (lhs >= rhs ? CheckStatus::kPass : CheckStatus::kFail) : CheckStatus::kSkipped};
}

AuditCheck at_most(std::string name, std::string ineq, Rational lhs, Rational rhs, bool ready) {
  return {std::move(name), std::move(ineq), lhs, rhs,
          ready ? (lhs <= rhs ? CheckStatus::kPass : CheckStatus::kFail) : CheckStatus::kSkipped};
}

}  // namespace

AuditReport audit_chain(const GadgetH& h, const MultiColoring& phi, const AuditConfig& config) {
  if (static_cast<int>(phi.phi.size()) != h.graph.order()) throw ColorError("coloring does not cover the gadget");
  if (auto ok = verify_coloring(h.graph, h.lists, phi, Coverage::kPartial); !ok) {
    throw ColorError("audit needs a valid partial coloring: " + ok.reason);
  }

  const int m = h.params.m;
  AuditReport r;
  r.m = m;
  r.e = h.e;
  r.epsilon = Rational(h.e, m);
  const Rational eps = r.epsilon;
  const Rational em = eps * m;
  const ChainAuditor a(h, phi);
  const std::string yb = config.y2_blocker;
  const std::string zb = config.z2_blocker;
  auto& out = r.checks;

  // Every bound is derived from the whole of H minus w, so a check only
  // runs once all of those vertices are colored.
  bool core = true;
  for (auto role : kGadgetRoles) {
    if (role != "w") core = core && a.colored(role);
  }

  // The y-cycle.
  out.push_back(at_least("x3.C", "|phi(x3) & C| >= (1 - eps) m", a.uses("x3", {"C"}), (1 - eps) * m, core));
  out.push_back(at_least(yb + ".C+E", "|phi(" + yb + ") & (C u E)| >= m", a.uses(yb, {"C", "E"}), m, core));
  out.push_back(at_most("y5.C", "|phi(y5) & C| <= eps m", a.uses("y5", {"C"}), em, core));
  out.push_back(at_most("y2.C", "|phi(y2) & C| <= eps m (blocked by " + yb + ")", a.uses("y2", {"C"}), em, core));
  out.push_back(at_most("y-cycle.reuse", "each color of D u E used <= 2 times on y1..y5",
                        a.max_cycle_reuse({"y1", "y2", "y3", "y4", "y5"}, {"D", "E"}), 2, core));
  out.push_back(at_least("tau", "tau >= 1 - 4 eps", Rational(a.uses("y3", {"A"}), m), 1 - 4 * eps, core));

  // x2.
  out.push_back(at_most("x2.C+E", "|phi(x2) & (C u E)| <= eps m", a.uses("x2", {"C", "E"}), em, core));
  out.push_back(at_most("x2.A", "|phi(x2) & A| <= 4 eps m", a.uses("x2", {"A"}), 4 * em, core));
  out.push_back(at_least("x2.B", "|phi(x2) & B| >= (1 - 5 eps) m", a.uses("x2", {"B"}), (1 - 5 * eps) * m, core));

  // The z-cycle.
  out.push_back(at_most("z2.C", "|phi(z2) & C| <= eps m (blocked by " + zb + ")", a.uses("z2", {"C"}), em, core));
  out.push_back(at_most("z1.B", "|phi(z1) & B| <= 5 eps m", a.uses("z1", {"B"}), 5 * em, core));
  out.push_back(at_most("z5.A", "|phi(z5) & A| <= 4 eps m", a.uses("z5", {"A"}), 4 * em, core));
  out.push_back(at_most("z-cycle.reuse", "each color of D u E used <= 2 times on z1..z5",
                        a.max_cycle_reuse({"z1", "z2", "z3", "z4", "z5"}, {"D", "E"}), 2, core));
  out.push_back(at_least("sigma", "sigma >= 1 - 12 eps", Rational(a.uses("z4", {"C"}), m), 1 - 12 * eps, core));

  // What is left for w.
  out.push_back(at_most("w.avail.A", "|A - phi(N(w))| <= 4 eps m", a.available_at_w("A"), 4 * em, core));
  out.push_back(at_most("w.avail.B", "|B - phi(N(w))| <= 0", a.available_at_w("B"), 0, core));
  out.push_back(at_most("w.avail.C", "|C - phi(N(w))| <= 12 eps m", a.available_at_w("C"), 12 * em, core));
  out.push_back(at_most("w.avail.E", "|E - phi(N(w))| <= eps m", a.available_at_w("E"), em, core));
  r.available_w = a.available_at_w("");
  out.push_back(at_most("w.avail", "|L(w) - phi(N(w))| <= 17 eps m", r.available_w, 17 * em, core));
  out.push_back(at_least("w.colorable", "|L(w) - phi(N(w))| >= m", r.available_w, m, core));
  r.slack = 17 * em - r.available_w;

  const bool violated = std::any_of(out.begin(), out.end() - 1,
                                    [](const AuditCheck& c) { return c.status == CheckStatus::kFail; });
  if (violated) {
    r.verdict = AuditVerdict::kBoundViolated;
  } else if (out.back().status == CheckStatus::kFail) {
    r.verdict = AuditVerdict::kContradiction;
  } else {
    r.verdict = AuditVerdict::kConsistent;
  }
  return r;
}

ExhaustiveAudit audit_exhaustive(const GadgetH& h, const Budget& budget, const AuditConfig& config) {
  const Vertex w = h.graph.at_role("w");
  std::vector<Vertex> keep;
  std::vector<ColorSet> lists;
  for (Vertex v = 0; v < h.graph.order(); ++v) {
    if (v == w) continue;
    keep.push_back(v);
    lists.push_back(h.lists.list(v));
  }
  const Graph rest = h.graph.induced(keep);
  const ListAssignment rest_lists(h.lists.universe(), std::move(lists));

  ExhaustiveAudit result;
  auto visited = for_each_coloring(
      rest, rest_lists, h.params.m,
      [&](const MultiColoring& partial) {
        MultiColoring full{partial.b, std::vector<ColorSet>(h.graph.order())};
        for (std::size_t i = 0; i < keep.size(); ++i) full.phi[keep[i]] = partial.phi[i];
        const AuditReport report = audit_chain(h, full, config);
        result.max_available_w = std::max(result.max_available_w, report.available_w);
        result.contradictions += report.verdict == AuditVerdict::kContradiction ? 1 : 0;
        result.bound_violations += report.verdict == AuditVerdict::kBoundViolated ? 1 : 0;
        return true;
      },
      budget);
  result.complete = visited.has_value();
  result.colorings = visited.value_or(0);
  return result;
}

std::string audit_to_json(const AuditReport& report) {
  json::Json doc;
  doc["m"] = report.m;
  doc["e"] = report.e;
  doc["epsilon"] = to_string(report.epsilon);
  doc["checks"] = json::Json::array();
  for (const auto& c : report.checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"inequality", c.inequality},
                             {"lhs", to_string(c.lhs)},
                             {"rhs", to_string(c.rhs)},
                             {"status", std::string(to_string(c.status))}});
  }
  doc["available_w"] = report.available_w;
  doc["slack"] = to_string(report.slack);
  doc["verdict"] = std::string(to_string(report.verdict));
  return doc.dump(2) + "\n";
}

std::string audit_to_markdown(const AuditReport& report) {
  std::ostringstream out;
  out << "Audit at m = " << report.m << ", |E| = " << report.e << ", eps = " << to_string(report.epsilon) << "\n\n";
  out << "| check | inequality | lhs | rhs | status |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& c : report.checks) {
    out << "| " << c.name << " | " << c.inequality << " | " << to_string(c.lhs) << " | " << to_string(c.rhs) << " | "
        << to_string(c.status) << " |\n";
  }
  out << "\navailable at w: " << report.available_w << ", slack under 17 eps m: " << to_string(report.slack)
      << ", verdict: " << to_string(report.verdict) << "\n";
  return out.str();
}

}  // namespace listfold
