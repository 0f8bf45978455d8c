#include "listfold/certificate.hpp"

#include <sstream>

#include "listfold/audit.hpp"
#include "listfold/json_io.hpp"

namespace listfold {

using json::Json;

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kVerified: return "verified";
    case ClaimStatus::kRefuted: return "refuted";
    case ClaimStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

ClaimStatus lemma1_status(const Lemma1Result& r) {
  if (r.tight.verdict == Verdict::kSat || r.loose.verdict == Verdict::kUnsat) return ClaimStatus::kRefuted;
  if (r.tight.verdict == Verdict::kUnsat && r.loose.verdict == Verdict::kSat) return ClaimStatus::kVerified;
  return ClaimStatus::kInconclusive;
}

ClaimStatus theorem1_status(const NonChoosabilityCertificate& c) {
  switch (c.verdict) {
    case Theorem1Verdict::kBlocked: return ClaimStatus::kVerified;
    case Theorem1Verdict::kRefuted: return ClaimStatus::kRefuted;
    case Theorem1Verdict::kInconclusive: return ClaimStatus::kInconclusive;
  }
  return ClaimStatus::kInconclusive;
}

namespace {

Json outcome_json(const Graph& g, const ListAssignment& lists, const SolveOutcome& o) {
  Json out;
  out["lists"] = json::lists(g, lists);
  out["verdict"] = std::string(to_string(o.verdict));
  out["nodes"] = o.stats.nodes;
  if (o.witness) out["witness"] = json::coloring(g, lists.universe(), *o.witness);
  return out;
}

Json stats_json(const SolveStats& s) {
  return {{"nodes", s.nodes},
          {"prunes_shortfall", s.prunes_shortfall},
          {"prunes_odd_cycle", s.prunes_odd_cycle},
          {"wall_ms", s.wall_ms}};
}

Json index_list(const std::vector<int>& v, std::string_view block) {
  Json out = Json::array();
  for (int i : v) out.push_back(std::string(block) + ":" + std::to_string(i));
  return out;
}

std::vector<int> parse_index_list(const nlohmann::json& doc, std::string_view block) {
  std::vector<int> out;
  for (const auto& s : doc) {
    const std::string text = s.get<std::string>();
    const std::string prefix = std::string(block) + ":";
    if (text.rfind(prefix, 0) != 0) throw ColorError("expected a " + std::string(block) + " color, got " + text);
    out.push_back(std::stoi(text.substr(prefix.size())));
  }
  return out;
}

}  // namespace

std::string lemma1_certificate_json(const Lemma1Result& r) {
  const GadgetH tight = build_H(r.params);
  const GadgetH loose = build_H(r.params, r.params.e_size + 1);
  Json doc;
  doc["kind"] = "lemma1";
  doc["m"] = r.params.m;
  doc["epsilon"] = to_string(r.params.epsilon);
  doc["e_tight"] = tight.e;
  doc["e_loose"] = loose.e;
  doc["graph"] = json::graph(tight.graph);
  doc["tight"] = outcome_json(tight.graph, tight.lists, r.tight);
  doc["tight"]["expected"] = "UNSAT";
  doc["loose"] = outcome_json(loose.graph, loose.lists, r.loose);
  doc["loose"]["expected"] = "SAT";
  doc["status"] = std::string(to_string(lemma1_status(r)));
  return doc.dump(2) + "\n";
}

std::string lemma1_stats_json(const Lemma1Result& r) {
  Json doc;
  doc["m"] = r.params.m;
  doc["tight"] = stats_json(r.tight.stats);
  doc["loose"] = stats_json(r.loose.stats);
  return doc.dump(2) + "\n";
}

std::string theorem1_certificate_json(const NonChoosabilityCertificate& c) {
  const ComposedGadget g = build_G(c.params, false);
  const GadgetH h = build_H(c.params);
  Json doc;
  doc["kind"] = "theorem1";
  doc["m"] = c.params.m;
  doc["epsilon"] = to_string(c.params.epsilon);
  doc["e"] = c.params.e_size;
  doc["list_size"] = c.list_size;
  doc["p"] = c.p.str();
  doc["copies"] = c.copies.str();
  doc["vertices"] = g.vertex_count.str();
  doc["edges"] = g.edge_count.str();
  doc["mode"] = std::string(to_string(c.mode));
  doc["pairs"] = Json::array();
  for (const auto& po : c.pairs) {
    Json rec;
    rec["index"] = po.pair.index;
    rec["phi_u"] = index_list(po.pair.phi_u, "X");
    rec["phi_v"] = index_list(po.pair.phi_v, "Y");
    rec["verdict"] = std::string(to_string(po.outcome.verdict));
    rec["nodes"] = po.outcome.stats.nodes;
    if (po.outcome.witness) {
      const ListAssignment lists = instantiate_copy_lists(h, po.pair.phi_u, po.pair.phi_v);
      rec["witness"] = json::coloring(h.graph, lists.universe(), *po.outcome.witness);
    }
    doc["pairs"].push_back(std::move(rec));
  }
  doc["relabeling"] = Json::array();
  for (const auto& r : c.relabeling) {
    doc["relabeling"].push_back({{"pair", r.pair},
                                 {"phi_u", index_list(r.phi_u, "X")},
                                 {"phi_v", index_list(r.phi_v, "Y")},
                                 {"x_perm", r.x_perm},
                                 {"y_perm", r.y_perm}});
  }
  doc["relabeling_complete"] = c.relabeling_complete;
  doc["verdict"] = std::string(to_string(c.verdict));
  if (!c.note.empty()) doc["note"] = c.note;
  return doc.dump(2) + "\n";
}

std::string theorem1_stats_json(const NonChoosabilityCertificate& c) {
  Json doc;
  doc["m"] = c.params.m;
  doc["pairs"] = Json::array();
  for (const auto& po : c.pairs) {
    Json s = stats_json(po.outcome.stats);
    s["index"] = po.pair.index;
    doc["pairs"].push_back(std::move(s));
  }
  return doc.dump(2) + "\n";
}

std::string theorem1_markdown(const NonChoosabilityCertificate& c) {
  std::ostringstream out;
  out << "Composition at m = " << c.params.m << ": lists of size " << c.list_size << ", p = " << c.p.str()
      << ", p^2 = " << c.copies.str() << " copies (" << to_string(c.mode) << " mode)\n\n";
  out << "| pair | phi(u) | phi(v) | extension | nodes |\n";
  out << "|---|---|---|---|---|\n";
  auto join = [](const std::vector<int>& v, char block) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::string(1, block) + std::to_string(v[i]);
    return s + "}";
  };
  for (const auto& po : c.pairs) {
    out << "| " << po.pair.index << " | " << join(po.pair.phi_u, 'X') << " | " << join(po.pair.phi_v, 'Y') << " | "
        << to_string(po.outcome.verdict) << " | " << po.outcome.stats.nodes << " |\n";
  }
  if (!c.relabeling.empty()) {
    out << "\nRelabeling onto the representative pair recorded for " << c.relabeling.size() << " of "
        << c.copies.str() << " pairs" << (c.relabeling_complete ? "" : " (sample)") << ".\n";
  }
  std::size_t blocked = 0;
  for (const auto& po : c.pairs) blocked += po.outcome.verdict == Verdict::kUnsat ? 1 : 0;
  out << "\n" << blocked << "/" << c.pairs.size() << " extension checks UNSAT; verdict: " << to_string(c.verdict)
      << "\n";
  if (!c.note.empty()) out << "\nNote: " << c.note << "\n";
  return out.str();
}

SweepRow sweep_row(const Lemma1Result& r) {
  return {r.params.m, r.params.e_size, 3 * r.params.m + r.params.e_size, r.tight.verdict, r.loose.verdict,
          r.tight.stats.wall_ms, r.loose.stats.wall_ms};
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool with_timings) {
  std::ostringstream out;
  out << "m,e_size,list_size,tight,loose" << (with_timings ? ",tight_ms,loose_ms" : "") << "\n";
  for (const auto& r : rows) {
    out << r.m << ',' << r.e_size << ',' << r.list_size << ',' << to_string(r.tight) << ',' << to_string(r.loose);
    if (with_timings) out << ',' << r.tight_ms << ',' << r.loose_ms;
    out << '\n';
  }
  return out.str();
}

std::string sweep_to_markdown(const std::vector<SweepRow>& rows, bool with_timings) {
  std::ostringstream out;
  out << "| m | eps m | 3m + ceil(m/17) - 1 | tight lists | +1 color |" << (with_timings ? " time (ms) |" : "")
      << "\n";
  out << "|---|---|---|---|---|" << (with_timings ? "---|" : "") << "\n";
  for (const auto& r : rows) {
    out << "| " << r.m << " | " << r.e_size << " | " << r.list_size << " | " << to_string(r.tight) << " | "
        << to_string(r.loose) << " |";
    if (with_timings) out << " " << (r.tight_ms + r.loose_ms) << " |";
    out << "\n";
  }
  return out.str();
}

namespace {

class Checker {
 public:
  CertificateCheck result;

  void ok(std::string line) { result.log.push_back(std::move(line) + ": ok"); }
  bool fail(std::string why) {
    if (result.reason.empty()) result.reason = std::move(why);
    return false;
  }

  bool check_lemma1(const nlohmann::json& doc) {
    const int m = doc.at("m").get<int>();
    const FoldParams params = FoldParams::of(m);
    if (doc.at("epsilon").get<std::string>() != to_string(params.epsilon)) return fail("epsilon does not match m");
    ok("epsilon = " + to_string(params.epsilon));
    if (auto id = chain_identities(m); !id) return fail(id.reason);
    ok("counting identities and 17 eps < 1 at m = " + std::to_string(m));

    const Graph g = graph_from_json(doc.at("graph").dump());
    if (!(g == gadget_graph())) return fail("certificate graph differs from the shipped gadget");
    ok("graph matches the shipped gadget");

    struct Side {
      const char* name;
      int e;
      const char* expected;
    };
    const Side sides[] = {{"tight", params.e_size, "UNSAT"}, {"loose", params.e_size + 1, "SAT"}};
    bool as_expected = true;
    for (const auto& side : sides) {
      const auto& rec = doc.at(side.name);
      const ListAssignment lists = json::lists_from(g, rec.at("lists"));
      if (!(lists == block_lists(params, side.e))) {
        return fail(std::string(side.name) + " lists differ from the construction");
      }
      ok(std::string(side.name) + " lists rebuilt (|E| = " + std::to_string(side.e) + ")");
      const std::string verdict = rec.at("verdict").get<std::string>();
      if (!check_verdict_entry(g, lists, m, rec, std::string(side.name))) return false;
      as_expected = as_expected && verdict == side.expected;
    }
    return check_status(doc, as_expected);
  }

  bool check_theorem1(const nlohmann::json& doc) {
    const int m = doc.at("m").get<int>();
    const FoldParams params = FoldParams::of(m);
    if (auto id = chain_identities(m); !id) return fail(id.reason);
    ok("counting identities and 17 eps < 1 at m = " + std::to_string(m));
    const ComposedGadget g = build_G(params, false);
    if (doc.at("list_size").get<int>() != g.list_size) return fail("list size differs from 3m + eps m");
    if (doc.at("p").get<std::string>() != g.p.str()) return fail("p differs from C(3m + eps m, m)");
    if (doc.at("copies").get<std::string>() != g.copies.str()) return fail("copies differ from p^2");
    if (doc.at("vertices").get<std::string>() != g.vertex_count.str()) return fail("vertex count differs");
    if (doc.at("edges").get<std::string>() != g.edge_count.str()) return fail("edge count differs");
    ok("p = " + g.p.str() + ", p^2 = " + g.copies.str() + ", |V| = " + g.vertex_count.str() +
       ", |E| = " + g.edge_count.str());

    const GadgetH h = build_H(params);
    const std::string mode = doc.at("mode").get<std::string>();
    std::size_t unsat = 0;
    bool any_sat = false;
    for (const auto& rec : doc.at("pairs")) {
      const std::uint64_t index = rec.at("index").get<std::uint64_t>();
      const CopyPair expected = g.copy(index);
      const auto phi_u = parse_index_list(rec.at("phi_u"), "X");
      const auto phi_v = parse_index_list(rec.at("phi_v"), "Y");
      if (phi_u != expected.phi_u || phi_v != expected.phi_v) {
        return fail("pair " + std::to_string(index) + " does not match its copy index");
      }
      const ListAssignment lists = instantiate_copy_lists(h, phi_u, phi_v);
      if (!check_verdict_entry(h.graph, lists, m, rec, "pair " + std::to_string(index))) return false;
      const std::string v = rec.at("verdict").get<std::string>();
      unsat += v == "UNSAT" ? 1 : 0;
      any_sat = any_sat || v == "SAT";
    }

    std::size_t relabeled = 0;
    for (const auto& rec : doc.at("relabeling")) {
      RelabelRecord r;
      r.pair = rec.at("pair").get<std::uint64_t>();
      r.phi_u = parse_index_list(rec.at("phi_u"), "X");
      r.phi_v = parse_index_list(rec.at("phi_v"), "Y");
      r.x_perm = rec.at("x_perm").get<std::vector<int>>();
      r.y_perm = rec.at("y_perm").get<std::vector<int>>();
      const CopyPair expected = g.copy(r.pair);
      if (r.phi_u != expected.phi_u || r.phi_v != expected.phi_v) {
        return fail("relabeling record " + std::to_string(r.pair) + " does not match its copy index");
      }
      if (auto c = check_relabeling(h, r); !c) return fail(c.reason);
      ++relabeled;
    }
    if (relabeled > 0) ok(std::to_string(relabeled) + " relabeling bijections map the representative lists");

    const std::string verdict = doc.at("verdict").get<std::string>();
    const std::size_t pairs = doc.at("pairs").size();
    if (verdict == "blocked") {
      if (any_sat) return fail("verdict blocked but some pair has a SAT extension");
      if (mode == "exhaustive" && BigInt(unsat) != g.copies) {
        return fail("exhaustive blocked verdict needs all p^2 pairs UNSAT");
      }
      if (mode == "representative") {
        if (unsat != 1 || pairs != 1) return fail("representative mode needs exactly one UNSAT pair");
        const bool complete = doc.at("relabeling_complete").get<bool>();
        if (complete && BigInt(relabeled) != g.copies) return fail("relabeling marked complete but pairs are missing");
      }
      ok("verdict blocked is consistent with " + std::to_string(unsat) + " UNSAT extension checks");
    } else if (verdict == "refuted") {
      if (!any_sat) return fail("verdict refuted without a SAT extension");
      ok("refutation witness re-validated");
    }
    result.accepted = true;
    return true;
  }

 private:
  bool check_verdict_entry(const Graph& g, const ListAssignment& lists, int b, const nlohmann::json& rec,
                           const std::string& what) {
    const std::string verdict = rec.at("verdict").get<std::string>();
    if (verdict == "SAT") {
      if (!rec.contains("witness")) return fail(what + " is SAT without a witness");
      const MultiColoring phi = json::coloring_from(g, lists.universe(), rec.at("witness"));
      if (phi.b != b) return fail(what + " witness has the wrong fold");
      if (auto c = verify_coloring(g, lists, phi); !c) return fail(what + " witness rejected: " + c.reason);
      ok("witness of " + what + " accepted by the coloring checker");
    } else if (verdict == "UNSAT") {
      result.log.push_back(what + ": UNSAT (search-attested)");
    } else {
      result.log.push_back(what + ": " + verdict);
    }
    return true;
  }

  bool check_status(const nlohmann::json& doc, bool as_expected) {
    const std::string status = doc.at("status").get<std::string>();
    if (status == "verified" && !as_expected) return fail("status verified but verdicts differ from the claim");
    result.accepted = true;
    return true;
  }
};

}  // namespace

CertificateCheck check_certificate(std::string_view json_text) {
  Checker c;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    c.result.kind = doc.at("kind").get<std::string>();
    if (c.result.kind == "lemma1") {
      c.check_lemma1(doc);
    } else if (c.result.kind == "theorem1") {
      c.check_theorem1(doc);
    } else {
      c.fail("unknown certificate kind " + c.result.kind);
    }
  } catch (const std::exception& e) {
    c.fail(std::string("malformed certificate: ") + e.what());
  }
  if (!c.result.reason.empty()) c.result.accepted = false;
  return c.result;
}

}  // namespace listfold
