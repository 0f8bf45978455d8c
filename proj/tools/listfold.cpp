// listfold: command-line front end.
//
// Exit codes: 0 verified / SAT, 1 refuted / UNSAT, 2 inconclusive / timeout,
// 3 usage error, 4 runtime error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "listfold/audit.hpp"
#include "listfold/certificate.hpp"
#include "listfold/fractional.hpp"
#include "listfold/gadget.hpp"
#include "listfold/json_io.hpp"
#include "listfold/solver.hpp"

namespace {

using namespace listfold;
using Json = nlohmann::ordered_json;

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;
constexpr int kExitRuntime = 4;
constexpr double kDefaultBudgetSeconds = 600.0;
constexpr const char* kBudgetEnv = "LISTFOLD_BUDGET";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<double> budget_seconds;
  std::optional<std::uint64_t> budget_nodes;
  std::string format;
  std::string out_path;
  std::string stats_path;
  int threads = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

class Run {
 public:
  explicit Run(const Globals& g) : g_(g) {}

  Budget budget() const {
    Budget b;
    double seconds = kDefaultBudgetSeconds;
    if (g_.budget_seconds) {
      seconds = *g_.budget_seconds;
    } else if (const char* env = std::getenv(kBudgetEnv); env && *env) {
      try {
        std::size_t used = 0;
        seconds = std::stod(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw UsageError(std::string(kBudgetEnv) + " must be a number of seconds, got '" + env + "'");
      }
    }
    if (!(seconds > 0)) throw UsageError("budget must be positive");
    b.max_time = std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
    if (g_.budget_nodes) {
      if (*g_.budget_nodes == 0) throw UsageError("--nodes must be positive");
      b.max_nodes = g_.budget_nodes;
    }
    return b;
  }

  /// The requested format, or `fallback` when none was given. Anything
  /// outside `allowed` is a usage error.
  std::string format(std::string_view fallback, std::initializer_list<std::string_view> allowed) const {
    const std::string f = g_.format.empty() ? std::string(fallback) : g_.format;
    for (auto a : allowed) {
      if (a == f) return f;
    }
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("format '" + f + "' is not available here (choose " + list + ")");
  }

  void emit(const std::string& text) const {
    if (g_.out_path.empty()) {
      std::cout << text;
    } else {
      write_file(g_.out_path, text);
    }
  }

  void stats(const Json& doc) const {
    if (!g_.stats_path.empty()) write_file(g_.stats_path, doc.dump(2) + "\n");
  }

  SolveOptions tuned(SolveOptions o) const {
    o.threads = g_.threads;
    return o;
  }

 private:
  const Globals& g_;
};

Json stats_json(const SolveStats& s) {
  return {{"nodes", s.nodes},
          {"prunes_shortfall", s.prunes_shortfall},
          {"prunes_odd_cycle", s.prunes_odd_cycle},
          {"wall_ms", s.wall_ms}};
}

int exit_for(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kVerified: return kExitVerified;
    case ClaimStatus::kRefuted: return kExitRefuted;
    case ClaimStatus::kInconclusive: return kExitInconclusive;
  }
  return kExitRuntime;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::kSat: return kExitVerified;
    case Verdict::kUnsat: return kExitRefuted;
    default: return kExitInconclusive;
  }
}

void check_m(int m) {
  if (m < 1) throw UsageError("--m must be at least 1");
}

// gadget ------------------------------------------------------------------

struct GadgetArgs {
  std::string which = "H";
  int m = 1;
  std::optional<int> e;
  bool explicit_graph = false;
  std::uint64_t cap = kDefaultExplicitCap;
  std::string export_format;
};

int cmd_gadget(const Run& run, const GadgetArgs& a) {
  check_m(a.m);
  const FoldParams params = FoldParams::of(a.m);
  const std::string fmt = run.format(a.export_format.empty() ? "md" : a.export_format, {"json", "md", "dot"});
  if (a.which == "H") {
    const GadgetH h = build_H(params, a.e);
    const auto emb = check_embedding(h.graph, h.embedding);
    if (fmt == "dot") {
      run.emit(export_graph(h.graph, ExportFormat::kDot));
    } else if (fmt == "json") {
      Json doc;
      doc["m"] = a.m;
      doc["e"] = h.e;
      doc["graph"] = json::graph(h.graph);
      doc["lists"] = json::lists(h.graph, h.lists);
      doc["girth"] = girth(h.graph).value_or(0);
      doc["degeneracy"] = degeneracy_order(h.graph).degeneracy;
      doc["faces"] = emb.faces;
      run.emit(doc.dump(2) + "\n");
    } else {
      std::ostringstream md;
      md << "| property | value |\n|---|---|\n";
      md << "| vertices | " << h.graph.order() << " |\n";
      md << "| edges | " << h.graph.size() << " (2V - 4 = " << 2 * h.graph.order() - 4 << ") |\n";
      md << "| girth | " << girth(h.graph).value_or(0) << " |\n";
      md << "| degeneracy | " << degeneracy_order(h.graph).degeneracy << " |\n";
      md << "| faces | " << emb.faces << " (" << (emb.accepted ? "planar" : "rejected") << ") |\n";
      md << "| list size off u, v | " << 3 * a.m + h.e << " |\n";
      run.emit(md.str());
    }
    return kExitVerified;
  }
  if (a.which != "G") throw UsageError("gadget is H or G");
  const ComposedGadget g = build_G(params, a.explicit_graph, a.cap);
  if (fmt == "dot") {
    if (!g.is_explicit()) throw UsageError("DOT export of G needs --explicit");
    run.emit(export_graph(*g.graph, ExportFormat::kDot));
  } else if (fmt == "json") {
    Json doc;
    doc["m"] = a.m;
    doc["list_size"] = g.list_size;
    doc["p"] = g.p.str();
    doc["copies"] = g.copies.str();
    doc["vertices"] = g.vertex_count.str();
    doc["edges"] = g.edge_count.str();
    doc["explicit"] = g.is_explicit();
    if (g.is_explicit()) doc["graph"] = json::graph(*g.graph);
    run.emit(doc.dump(2) + "\n");
  } else {
    std::ostringstream md;
    md << "| m | list size | p | copies | vertices | edges | mode |\n|---|---|---|---|---|---|---|\n";
    md << "| " << a.m << " | " << g.list_size << " | " << g.p << " | " << g.copies << " | " << g.vertex_count
       << " | " << g.edge_count << " | " << (g.is_explicit() ? "explicit" : "virtual") << " |\n";
    run.emit(md.str());
  }
  return kExitVerified;
}

// solve -------------------------------------------------------------------

struct SolveArgs {
  std::string graph_path;
  std::string lists_path;
  int b = 1;
  std::string method = "search";
  bool no_orbit = false;
  bool odd_cycle_cut = false;
};

int cmd_solve(const Run& run, const SolveArgs& a) {
  if (a.b < 1) throw UsageError("--b must be at least 1");
  const Graph g = graph_from_json(read_file(a.graph_path));
  const ListAssignment lists = lists_from_json(g, read_file(a.lists_path));
  SolveOutcome out;
  if (a.method == "brute") {
    out = brute_force_solve(g, lists, a.b, run.budget());
  } else if (a.method == "greedy") {
    out = greedy_degenerate_solve(g, lists, a.b);
  } else {
    SolveOptions o;
    o.orbit_symmetry = !a.no_orbit;
    o.odd_cycle_cut = a.odd_cycle_cut;
    out = solve(g, lists, a.b, run.budget(), run.tuned(o));
  }
  const std::string fmt = run.format("json", {"json", "csv"});
  if (fmt == "json") {
    Json doc;
    doc["verdict"] = std::string(to_string(out.verdict));
    if (out.witness) doc["witness"] = json::coloring(g, lists.universe(), *out.witness);
    doc["stats"] = {{"nodes", out.stats.nodes},
                    {"prunes_shortfall", out.stats.prunes_shortfall},
                    {"prunes_odd_cycle", out.stats.prunes_odd_cycle}};
    run.emit(doc.dump(2) + "\n");
  } else {
    run.emit("verdict,nodes\n" + std::string(to_string(out.verdict)) + "," + std::to_string(out.stats.nodes) + "\n");
  }
  run.stats(stats_json(out.stats));
  return exit_for(out.verdict);
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
  int m = 1;
  std::string mode = "exhaustive";
  std::uint64_t cap = kDefaultExplicitCap;
  std::string certificate_path;
};

int cmd_lemma1(const Run& run, const VerifyArgs& a) {
  check_m(a.m);
  const auto r = verify_lemma1(FoldParams::of(a.m), run.budget(), run.tuned(gadget_solve_options()));
  const auto status = lemma1_status(r);
  const std::string cert = lemma1_certificate_json(r);
  if (!a.certificate_path.empty()) write_file(a.certificate_path, cert);
  const std::string fmt = run.format("md", {"json", "csv", "md"});
  if (fmt == "json") {
    run.emit(cert);
  } else if (fmt == "csv") {
    std::ostringstream csv;
    csv << "m,side,e,list_size,verdict,expected,nodes\n";
    csv << a.m << ",tight," << r.params.e_size << ',' << r.tight_list_size << ',' << to_string(r.tight.verdict)
        << ",UNSAT," << r.tight.stats.nodes << '\n';
    csv << a.m << ",loose," << r.params.e_size + 1 << ',' << r.loose_list_size << ',' << to_string(r.loose.verdict)
        << ",SAT," << r.loose.stats.nodes << '\n';
    run.emit(csv.str());
  } else {
    std::ostringstream md;
    md << "| m | side | list size | verdict | expected | nodes |\n|---|---|---|---|---|---|\n";
    md << "| " << a.m << " | tight | " << r.tight_list_size << " | " << to_string(r.tight.verdict) << " | UNSAT | "
       << r.tight.stats.nodes << " |\n";
    md << "| " << a.m << " | +1 color | " << r.loose_list_size << " | " << to_string(r.loose.verdict)
       << " | SAT | " << r.loose.stats.nodes << " |\n";
    md << "\nstatus: " << to_string(status) << "\n";
    run.emit(md.str());
  }
  run.stats(Json::parse(lemma1_stats_json(r)));
  return exit_for(status);
}

int cmd_theorem1(const Run& run, const VerifyArgs& a) {
  check_m(a.m);
  Theorem1Mode mode;
  if (a.mode == "exhaustive") {
    mode = Theorem1Mode::kExhaustive;
  } else if (a.mode == "representative") {
    mode = Theorem1Mode::kRepresentative;
  } else {
    throw UsageError("--mode is exhaustive or representative");
  }
  const auto c = verify_theorem1(FoldParams::of(a.m), mode, run.budget(), a.cap, run.tuned(gadget_solve_options()));
  const std::string cert = theorem1_certificate_json(c);
  if (!a.certificate_path.empty()) write_file(a.certificate_path, cert);
  const std::string fmt = run.format("md", {"json", "csv", "md"});
  if (fmt == "json") {
    run.emit(cert);
  } else if (fmt == "csv") {
    std::ostringstream csv;
    csv << "pair,phi_u,phi_v,verdict,nodes\n";
    for (const auto& p : c.pairs) {
      csv << p.pair.index << ',';
      for (std::size_t i = 0; i < p.pair.phi_u.size(); ++i) csv << (i ? " " : "") << "X" << p.pair.phi_u[i];
      csv << ',';
      for (std::size_t i = 0; i < p.pair.phi_v.size(); ++i) csv << (i ? " " : "") << "Y" << p.pair.phi_v[i];
      csv << ',' << to_string(p.outcome.verdict) << ',' << p.outcome.stats.nodes << '\n';
    }
    run.emit(csv.str());
  } else {
    run.emit(theorem1_markdown(c));
  }
  run.stats(Json::parse(theorem1_stats_json(c)));
  return exit_for(theorem1_status(c));
}

// audit -------------------------------------------------------------------

struct AuditArgs {
  int m = 1;
  std::optional<int> e;
  std::string coloring_path;
  std::string y2_blocker = "x1";
  std::string z2_blocker = "x1";
};

int cmd_audit(const Run& run, const AuditArgs& a) {
  check_m(a.m);
  const GadgetH h = build_H(FoldParams::of(a.m), a.e);
  const AuditConfig cfg{a.y2_blocker, a.z2_blocker};
  for (const auto& role : {cfg.y2_blocker, cfg.z2_blocker}) {
    if (!h.graph.find_role(role)) throw UsageError("unknown blocker role " + role);
  }
  if (!a.coloring_path.empty()) {
    const MultiColoring phi = coloring_from_json(h.graph, h.lists.universe(), read_file(a.coloring_path));
    const AuditReport r = audit_chain(h, phi, cfg);
    const std::string fmt = run.format("md", {"json", "md"});
    run.emit(fmt == "json" ? audit_to_json(r) : audit_to_markdown(r));
    return r.verdict == AuditVerdict::kBoundViolated ? kExitRefuted : kExitVerified;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const ExhaustiveAudit x = audit_exhaustive(h, run.budget(), cfg);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const Rational bound = 17 * Rational(h.e, a.m) * a.m;
  const std::string fmt = run.format("md", {"json", "csv", "md"});
  if (fmt == "json") {
    Json doc;
    doc["m"] = a.m;
    doc["e"] = h.e;
    doc["colorings"] = x.colorings;
    doc["max_available_w"] = x.max_available_w;
    doc["bound_17_eps_m"] = to_string(bound);
    doc["contradictions"] = x.contradictions;
    doc["bound_violations"] = x.bound_violations;
    doc["complete"] = x.complete;
    run.emit(doc.dump(2) + "\n");
  } else if (fmt == "csv") {
    run.emit("m,e,colorings,max_available_w,bound,contradictions,bound_violations,complete\n" +
             std::to_string(a.m) + "," + std::to_string(h.e) + "," + std::to_string(x.colorings) + "," +
             std::to_string(x.max_available_w) + "," + to_string(bound) + "," + std::to_string(x.contradictions) +
             "," + std::to_string(x.bound_violations) + "," + (x.complete ? "true" : "false") + "\n");
  } else {
    std::ostringstream md;
    md << "| m | e | colorings of H - w | max available at w | 17 eps m | bound violations | complete |\n"
       << "|---|---|---|---|---|---|---|\n"
       << "| " << a.m << " | " << h.e << " | " << x.colorings << " | " << x.max_available_w << " | "
       << to_string(bound) << " | " << x.bound_violations << " | " << (x.complete ? "yes" : "no") << " |\n";
    run.emit(md.str());
  }
  run.stats({{"wall_ms", ms}});
  if (!x.complete) return kExitInconclusive;
  // At tight lists every coloring of H - w must leave fewer than m colors for w.
  const bool tight = h.e == FoldParams::of(a.m).e_size;
  if (x.bound_violations > 0 || (tight && x.max_available_w >= a.m)) return kExitRefuted;
  return kExitVerified;
}

// chif --------------------------------------------------------------------

struct ChifArgs {
  std::string graph_path;
  int max_b = 4;
};

int cmd_chif(const Run& run, const ChifArgs& a) {
  if (a.max_b < 1) throw UsageError("--max-b must be at least 1");
  const Graph g = a.graph_path.empty() ? gadget_graph() : graph_from_json(read_file(a.graph_path));
  const ChiFBounds b = chi_f_bounds(g, a.max_b, run.budget());
  const std::string fmt = run.format("json", {"json", "csv", "md"});
  Json timings = Json::array();
  for (const auto& p : b.points) timings.push_back({{"a", p.a}, {"b", p.b}, {"wall_ms", p.wall_ms}});
  if (fmt == "json") {
    Json doc;
    doc["vertices"] = g.order();
    doc["alpha"] = independence_number(g);
    doc["lower"] = to_string(b.lower);
    doc["upper"] = b.upper ? Json(to_string(*b.upper)) : Json(nullptr);
    if (b.best_a) doc["best"] = {{"a", *b.best_a}, {"b", *b.best_b}};
    doc["exact_per_b"] = b.exact_per_b;
    doc["points"] = Json::array();
    for (const auto& p : b.points) {
      doc["points"].push_back({{"a", p.a}, {"b", p.b}, {"verdict", std::string(to_string(p.verdict))}, {"nodes", p.nodes}});
    }
    if (b.witness) doc["witness"] = json::coloring(g, ColorUniverse::build({{"K", *b.best_a}}), *b.witness);
    run.emit(doc.dump(2) + "\n");
  } else if (fmt == "csv") {
    std::ostringstream csv;
    csv << "a,b,verdict,nodes\n";
    for (const auto& p : b.points) csv << p.a << ',' << p.b << ',' << to_string(p.verdict) << ',' << p.nodes << '\n';
    run.emit(csv.str());
  } else {
    std::ostringstream md;
    md << "| a | b | verdict | nodes |\n|---|---|---|---|\n";
    for (const auto& p : b.points) {
      md << "| " << p.a << " | " << p.b << " | " << to_string(p.verdict) << " | " << p.nodes << " |\n";
    }
    md << "\nchi_f in [" << to_string(b.lower) << ", " << (b.upper ? to_string(*b.upper) : "?") << "]\n";
    run.emit(md.str());
  }
  run.stats({{"points", timings}});
  return b.upper && b.exact_per_b ? kExitVerified : kExitInconclusive;
}

// sweep -------------------------------------------------------------------

struct SweepArgs {
  int from = 1;
  int to = 2;
};

int cmd_sweep(const Run& run, const SweepArgs& a) {
  if (a.from < 1) throw UsageError("--from must be at least 1");
  std::vector<SweepRow> rows;
  bool refuted = false;
  bool inconclusive = false;
  for (int m = a.from; m <= a.to; ++m) {
    const auto r = verify_lemma1(FoldParams::of(m), run.budget(), run.tuned(gadget_solve_options()));
    rows.push_back(sweep_row(r));
    const auto s = lemma1_status(r);
    refuted = refuted || s == ClaimStatus::kRefuted;
    inconclusive = inconclusive || s == ClaimStatus::kInconclusive;
  }
  const std::string fmt = run.format("csv", {"csv", "md"});
  run.emit(fmt == "csv" ? sweep_to_csv(rows, false) : sweep_to_markdown(rows, false));
  Json timings = Json::array();
  for (const auto& r : rows) timings.push_back({{"m", r.m}, {"tight_ms", r.tight_ms}, {"loose_ms", r.loose_ms}});
  run.stats({{"rows", timings}});
  return refuted ? kExitRefuted : inconclusive ? kExitInconclusive : kExitVerified;
}

// export ------------------------------------------------------------------

struct ExportArgs {
  std::string what = "H";
  int m = 1;
  std::optional<int> e;
  std::uint64_t cap = kDefaultExplicitCap;
};

int cmd_export(const Run& run, const ExportArgs& a) {
  check_m(a.m);
  const FoldParams params = FoldParams::of(a.m);
  if (a.what == "lists") {
    run.format("json", {"json"});
    const GadgetH h = build_H(params, a.e);
    run.emit(lists_to_json(h.graph, h.lists));
    return kExitVerified;
  }
  const std::string fmt = run.format("json", {"json", "dot"});
  const ExportFormat ef = fmt == "dot" ? ExportFormat::kDot : ExportFormat::kJson;
  if (a.what == "H") {
    run.emit(export_graph(build_H(params, a.e).graph, ef));
  } else if (a.what == "G") {
    const ComposedGadget g = build_G(params, true, a.cap);
    run.emit(export_graph(*g.graph, ef));
  } else if (a.what == "G-lists") {
    if (fmt != "json") throw UsageError("lists export is JSON only");
    const ComposedGadget g = build_G(params, true, a.cap);
    run.emit(lists_to_json(*g.graph, *g.lists));
  } else {
    throw UsageError("export H, G, lists or G-lists");
  }
  return kExitVerified;
}

// check-certificate -------------------------------------------------------

int cmd_check(const Run& run, const std::string& path) {
  const CertificateCheck c = check_certificate(read_file(path));
  std::ostringstream out;
  out << "kind: " << (c.kind.empty() ? "?" : c.kind) << "\n";
  for (const auto& line : c.log) out << "  " << line << "\n";
  out << (c.accepted ? "ACCEPTED" : "REJECTED: " + c.reason) << "\n";
  run.emit(out.str());
  return c.accepted ? kExitVerified : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"listfold: b-fold list coloring gadgets, certificates and audits"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--budget", g.budget_seconds,
                 std::string("time budget per solver run in seconds (default $") + kBudgetEnv + " or 600)");
  app.add_option("--nodes", g.budget_nodes, "node budget per solver run");
  auto* format_opt = app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "md", "dot"}));
  app.add_option("-o,--out", g.out_path, "write the primary output here instead of stdout");
  app.add_option("--stats", g.stats_path, "write timings and counters here");
  app.add_option("--threads", g.threads, "solver threads for the root split")->check(CLI::Range(1, 256));

  GadgetArgs ga;
  auto* gadget = app.add_subcommand("gadget", "build H or the composed G and describe it");
  gadget->add_option("which", ga.which, "H or G")->check(CLI::IsMember({"H", "G"}));
  gadget->add_option("--m", ga.m, "fold m")->required();
  gadget->add_option("--e", ga.e, "override the E-block size");
  gadget->add_flag("--explicit", ga.explicit_graph, "materialise G");
  gadget->add_option("--cap", ga.cap, "largest number of copies materialised");
  gadget->add_option("--export", ga.export_format, "json, md or dot")
      ->check(CLI::IsMember({"json", "md", "dot"}))
      ->excludes(format_opt);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "decide b-fold L-colorability of an instance");
  solve_cmd->add_option("--graph", sa.graph_path, "graph JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--lists", sa.lists_path, "list-assignment JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--b", sa.b, "fold b")->required();
  solve_cmd->add_option("--method", sa.method, "search, brute or greedy")
      ->check(CLI::IsMember({"search", "brute", "greedy"}));
  solve_cmd->add_flag("--no-orbit", sa.no_orbit, "disable orbit symmetry reduction");
  solve_cmd->add_flag("--odd-cycle-cut", sa.odd_cycle_cut, "enable the odd-cycle counting cut");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a claim at a given m");
  verify->require_subcommand(1);
  auto* lemma1 = verify->add_subcommand("lemma1", "tight lists UNSAT, one more color SAT");
  lemma1->add_option("--m", va.m, "fold m")->required();
  lemma1->add_option("--certificate", va.certificate_path, "write the certificate JSON here");
  auto* theorem1 = verify->add_subcommand("theorem1", "no coloring of u, v extends to G");
  theorem1->add_option("--m", va.m, "fold m")->required();
  theorem1->add_option("--mode", va.mode, "exhaustive or representative")
      ->check(CLI::IsMember({"exhaustive", "representative"}));
  theorem1->add_option("--cap", va.cap, "pair limit for exhaustive mode and relabeling records");
  theorem1->add_option("--certificate", va.certificate_path, "write the certificate JSON here");

  AuditArgs aa;
  auto* audit = app.add_subcommand("audit", "replay the counting argument");
  audit->add_option("--m", aa.m, "fold m")->required();
  audit->add_option("--e", aa.e, "override the E-block size");
  audit->add_option("--coloring", aa.coloring_path, "audit this (partial) coloring instead of enumerating")
      ->check(CLI::ExistingFile);
  audit->add_option("--y2-blocker", aa.y2_blocker, "role that blocks the C-colors of y2");
  audit->add_option("--z2-blocker", aa.z2_blocker, "role that blocks the C-colors of z2");

  ChifArgs ca;
  auto* chif = app.add_subcommand("chif", "bounds on the fractional chromatic number");
  chif->add_option("--graph", ca.graph_path, "graph JSON (default: the gadget H)")->check(CLI::ExistingFile);
  chif->add_option("--max-b", ca.max_b, "largest b in the sweep");

  SweepArgs wa;
  auto* sweep = app.add_subcommand("sweep", "lemma check for a range of m");
  sweep->add_option("--from", wa.from, "first m");
  sweep->add_option("--to", wa.to, "last m (empty range when below --from)");

  ExportArgs ea;
  auto* exp = app.add_subcommand("export", "write H, G or lists");
  exp->add_option("what", ea.what, "H, G, lists or G-lists")->check(CLI::IsMember({"H", "G", "lists", "G-lists"}));
  exp->add_option("--m", ea.m, "fold m")->required();
  exp->add_option("--e", ea.e, "override the E-block size");
  exp->add_option("--cap", ea.cap, "largest number of copies materialised");

  std::string cert_path;
  auto* check = app.add_subcommand("check-certificate", "re-validate a certificate without the solver");
  check->add_option("file", cert_path, "certificate JSON")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const Run run(g);
  try {
    if (*gadget) return cmd_gadget(run, ga);
    if (*solve_cmd) return cmd_solve(run, sa);
    if (*lemma1) return cmd_lemma1(run, va);
    if (*theorem1) return cmd_theorem1(run, va);
    if (*audit) return cmd_audit(run, aa);
    if (*chif) return cmd_chif(run, ca);
    if (*sweep) return cmd_sweep(run, wa);
    if (*exp) return cmd_export(run, ea);
    if (*check) return cmd_check(run, cert_path);
  } catch (const UsageError& e) {
    std::cerr << "listfold: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "listfold: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
