#include "listfold/gadget.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

namespace listfold {

namespace detail {
extern const std::string_view kGadgetHJson;
}

std::string_view gadget_h_data() { return detail::kGadgetHJson; }

Graph gadget_graph() { return graph_from_json(gadget_h_data()); }

EmbeddingCertificate gadget_embedding() {
  const auto doc = nlohmann::json::parse(gadget_h_data());
  const Graph g = gadget_graph();
  EmbeddingCertificate cert;
  cert.rotation.assign(g.order(), {});
  const auto& emb = doc.at("embedding");
  cert.declared_faces = emb.at("faces").get<int>();
  for (const auto& rec : emb.at("rotation")) {
    auto v = g.find_id(rec.at("vertex").get<std::int64_t>());
    if (!v) throw GadgetError("embedding names an unknown vertex");
    for (const auto& w : rec.at("order")) {
      auto pw = g.find_id(w.get<std::int64_t>());
      if (!pw) throw GadgetError("embedding names an unknown neighbour");
      cert.rotation[*v].push_back(*pw);
    }
  }
  return cert;
}

GadgetH build_H(const FoldParams& params, std::optional<int> e_override) {
  GadgetH h;
  h.graph = gadget_graph();
  h.embedding = gadget_embedding();
  h.params = params;
  h.e = e_override.value_or(params.e_size);

  const Graph& g = h.graph;
  if (g.order() != static_cast<int>(kGadgetRoles.size())) {
    throw GadgetError("gadget must have 16 vertices, transcription has " + std::to_string(g.order()));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.role(v) != kGadgetRoles[v]) {
      throw GadgetError("vertex " + std::to_string(v) + " should have role " + std::string(kGadgetRoles[v]) +
                        ", found '" + g.role(v) + "'");
    }
  }
  auto gi = girth(g);
  if (gi && *gi < 4) throw GadgetError("gadget contains a triangle");
  if (g.size() > 2 * g.order() - 4) throw GadgetError("gadget violates E <= 2V - 4 for triangle-free planar graphs");
  auto emb = check_embedding(g, h.embedding);
  if (!emb.accepted) throw GadgetError("gadget embedding rejected: " + emb.reason);

  h.lists = block_lists(params, h.e);
  return h;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

std::uint64_t binomial64(int n, int k) {
  BigInt b = binomial(n, k);
  if (b > std::numeric_limits<std::uint64_t>::max()) throw GadgetError("binomial coefficient exceeds 64 bits");
  return b.convert_to<std::uint64_t>();
}

}  // namespace

std::vector<int> unrank_subset(int n, int k, std::uint64_t rank) {
  std::vector<int> out;
  int next = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (int c = next; c < n; ++c) {
      const std::uint64_t below = binomial64(n - c - 1, k - slot - 1);
      if (rank < below) {
        out.push_back(c);
        next = c + 1;
        break;
      }
      rank -= below;
    }
  }
  if (static_cast<int>(out.size()) != k) throw GadgetError("subset rank out of range");
  return out;
}

std::uint64_t rank_subset(int n, std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  std::uint64_t rank = 0;
  int next = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (int c = next; c < subset[slot]; ++c) rank += binomial64(n - c - 1, k - slot - 1);
    next = subset[slot] + 1;
  }
  return rank;
}

std::uint64_t ComposedGadget::copy_count() const {
  if (copies > std::numeric_limits<std::uint64_t>::max()) throw GadgetError("p^2 exceeds 64 bits");
  return copies.convert_to<std::uint64_t>();
}

CopyPair ComposedGadget::copy(std::uint64_t k) const {
  if (BigInt(k) >= copies) throw GadgetError("copy index out of range");
  if (p > std::numeric_limits<std::uint64_t>::max()) throw GadgetError("p exceeds 64 bits");
  const std::uint64_t pp = p.convert_to<std::uint64_t>();
  return {k, unrank_subset(list_size, params.m, k / pp), unrank_subset(list_size, params.m, k % pp)};
}

ColorUniverse copy_universe(int m, int e) {
  return ColorUniverse::build({{"X", 3 * m + e}, {"Y", 3 * m + e}, {"C", m}, {"D", 2 * m}, {"E", e}});
}

namespace {

void check_subset(std::span<const int> s, int m, int n, const char* which) {
  if (static_cast<int>(s.size()) != m) {
    throw GadgetError(std::string(which) + " must have exactly m = " + std::to_string(m) + " colors");
  }
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GadgetError(std::string(which) + " repeats a color");
  }
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= n)) {
    throw GadgetError(std::string(which) + " indexes outside its block");
  }
}

ColorSet pick(const ColorUniverse& u, int block, std::span<const int> indices) {
  ColorSet s;
  for (int i : indices) s.push_back(u.flat({block, i}));
  return make_color_set(std::move(s));
}

}  // namespace

ListAssignment instantiate_copy_lists(const GadgetH& h, std::span<const int> phi_u, std::span<const int> phi_v) {
  const int m = h.params.m;
  const int n = 3 * m + h.e;
  check_subset(phi_u, m, n, "phi(u)");
  check_subset(phi_v, m, n, "phi(v)");
  ColorUniverse u = copy_universe(m, h.e);
  GadgetBlocks blocks{pick(u, 0, phi_u), pick(u, 1, phi_v), u.block_colors(2), u.block_colors(3), u.block_colors(4)};
  auto lists = gadget_lists(blocks);
  return ListAssignment(std::move(u), std::move(lists));
}

ComposedGadget build_G(const FoldParams& params, bool explicit_graph, std::uint64_t cap) {
  ComposedGadget cg;
  cg.params = params;
  cg.list_size = 3 * params.m + params.e_size;
  const Graph h = gadget_graph();
  cg.h_vertices = h.order();
  cg.h_edges = h.size();
  cg.p = binomial(cg.list_size, params.m);
  cg.copies = cg.p * cg.p;
  cg.vertex_count = 2 + BigInt(h.order() - 2) * cg.copies;
  cg.edge_count = BigInt(h.size()) * cg.copies;
  cg.uv_universe = ColorUniverse::build({{"X", cg.list_size}, {"Y", cg.list_size}});
  if (!explicit_graph) return cg;

  if (cg.copies > cap) {
    throw GadgetError("explicit G needs " + cg.copies.str() + " copies, above the cap of " + std::to_string(cap) +
                      "; use the virtual representation");
  }
  const std::uint64_t copies = cg.copy_count();
  const Vertex hu = h.at_role("u");
  const Vertex hv = h.at_role("v");

  std::vector<VertexSpec> vs{{0, "u"}, {1, "v"}};
  std::vector<BlockSpec> blocks{{"X", cg.list_size}, {"Y", cg.list_size}};
  for (std::uint64_t k = 0; k < copies; ++k) {
    const std::string tag = "#" + std::to_string(k);
    blocks.push_back({"C" + tag, params.m});
    blocks.push_back({"D" + tag, 2 * params.m});
    blocks.push_back({"E" + tag, params.e_size});
  }
  ColorUniverse universe = ColorUniverse::build(blocks);

  // Internal vertices of copy k get ids 2 + 14k + j for the j-th non-u,v role.
  std::vector<std::int64_t> slot(h.order(), -1);
  int j = 0;
  for (Vertex x = 0; x < h.order(); ++x) {
    if (x != hu && x != hv) slot[x] = j++;
  }
  const int internal = h.order() - 2;
  auto gid = [&](std::uint64_t k, Vertex x) -> std::int64_t {
    if (x == hu) return 0;
    if (x == hv) return 1;
    return 2 + static_cast<std::int64_t>(k) * internal + slot[x];
  };

  std::vector<std::pair<std::int64_t, std::int64_t>> es;
  std::vector<ColorSet> lists(2 + copies * internal);
  lists[0] = universe.block_colors(0);
  lists[1] = universe.block_colors(1);
  for (std::uint64_t k = 0; k < copies; ++k) {
    for (Vertex x = 0; x < h.order(); ++x) {
      if (x != hu && x != hv) vs.push_back({gid(k, x), h.role(x) + "#" + std::to_string(k)});
    }
    for (const auto& [a, b] : h.edges()) es.emplace_back(gid(k, a), gid(k, b));

    const CopyPair pair = cg.copy(k);
    const int base = 2 + 3 * static_cast<int>(k);
    GadgetBlocks gb{pick(universe, 0, pair.phi_u), pick(universe, 1, pair.phi_v), universe.block_colors(base),
                    universe.block_colors(base + 1), universe.block_colors(base + 2)};
    const auto copy_lists = gadget_lists(gb);
    for (Vertex x = 0; x < h.order(); ++x) {
      if (x != hu && x != hv) lists[gid(k, x)] = copy_lists[x];
    }
  }
  cg.graph = Graph::build(std::move(vs), es);
  cg.lists = ListAssignment(std::move(universe), std::move(lists));
  return cg;
}

CopyPair representative_pair(int m) {
  CopyPair rep;
  for (int i = 0; i < m; ++i) {
    rep.phi_u.push_back(i);
    rep.phi_v.push_back(i);
  }
  return rep;
}

namespace {

/// Permutation of {0..n-1} sending 0..m-1 onto `target` in order and the
/// remaining indices onto the complement in order.
std::vector<int> block_perm(std::span<const int> target, int n) {
  std::vector<int> sorted(target.begin(), target.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> perm(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (!std::binary_search(sorted.begin(), sorted.end(), i)) perm.push_back(i);
  }
  return perm;
}

}  // namespace

RelabelRecord relabeling_for(const CopyPair& pair, int list_size) {
  return {pair.index, pair.phi_u, pair.phi_v, block_perm(pair.phi_u, list_size), block_perm(pair.phi_v, list_size)};
}

std::vector<ColorId> relabel_permutation(const RelabelRecord& rec, int m, int e) {
  const ColorUniverse u = copy_universe(m, e);
  std::vector<ColorId> perm(u.size());
  for (ColorId c = 0; c < u.size(); ++c) {
    const Color col = u.color(c);
    if (col.block == 0) {
      perm[c] = u.flat({0, rec.x_perm.at(col.index)});
    } else if (col.block == 1) {
      perm[c] = u.flat({1, rec.y_perm.at(col.index)});
    } else {
      perm[c] = c;
    }
  }
  return perm;
}

CheckResult check_relabeling(const GadgetH& h, const RelabelRecord& rec) {
  const int m = h.params.m;
  const int n = 3 * m + h.e;
  auto is_perm = [n](const std::vector<int>& p) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i) {
      if (s[i] != i) return false;
    }
    return true;
  };
  if (!is_perm(rec.x_perm)) return {false, "x_perm of pair " + std::to_string(rec.pair) + " is not a bijection"};
  if (!is_perm(rec.y_perm)) return {false, "y_perm of pair " + std::to_string(rec.pair) + " is not a bijection"};

  const CopyPair rep = representative_pair(m);
  ListAssignment base;
  ListAssignment target;
  try {
    base = instantiate_copy_lists(h, rep.phi_u, rep.phi_v);
    target = instantiate_copy_lists(h, rec.phi_u, rec.phi_v);
  } catch (const GadgetError& e) {
    return {false, e.what()};
  }
  const auto perm = relabel_permutation(rec, m, h.e);
  if (relabel(base, perm) != target) {
    return {false, "bijection of pair " + std::to_string(rec.pair) + " does not map the representative lists"};
  }
  return {true, {}};
}

SolveOptions gadget_solve_options() {
  SolveOptions o;
  o.odd_cycle_cut = true;
  o.odd_cycle_max_length = 5;
  return o;
}

Lemma1Result verify_lemma1(const FoldParams& params, const Budget& budget, const SolveOptions& options) {
  Lemma1Result r;
  r.params = params;
  const GadgetH tight = build_H(params);
  const GadgetH loose = build_H(params, params.e_size + 1);
  r.tight_list_size = 3 * params.m + tight.e;
  r.loose_list_size = 3 * params.m + loose.e;
  r.tight = solve(tight.graph, tight.lists, params.m, budget, options);
  r.loose = solve(loose.graph, loose.lists, params.m, budget, options);
  return r;
}

std::string_view to_string(Theorem1Mode m) {
  return m == Theorem1Mode::kExhaustive ? "exhaustive" : "representative";
}

std::string_view to_string(Theorem1Verdict v) {
  switch (v) {
    case Theorem1Verdict::kBlocked: return "blocked";
    case Theorem1Verdict::kRefuted: return "refuted";
    case Theorem1Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

NonChoosabilityCertificate verify_theorem1(const FoldParams& params, Theorem1Mode mode, const Budget& budget,
                                           std::uint64_t cap, const SolveOptions& options) {
  NonChoosabilityCertificate cert;
  cert.params = params;
  cert.mode = mode;
  const ComposedGadget g = build_G(params, false);
  cert.list_size = g.list_size;
  cert.p = g.p;
  cert.copies = g.copies;
  const GadgetH h = build_H(params);

  auto solve_pair = [&](const CopyPair& pair) {
    const ListAssignment lists = instantiate_copy_lists(h, pair.phi_u, pair.phi_v);
    return PairOutcome{pair, solve(h.graph, lists, params.m, budget, options)};
  };

  if (mode == Theorem1Mode::kExhaustive) {
    if (g.copies > cap) {
      throw GadgetError("exhaustive mode needs " + g.copies.str() + " extension checks, above the cap of " +
                        std::to_string(cap));
    }
    bool timeout = false;
    for (std::uint64_t k = 0; k < g.copy_count(); ++k) {
      cert.pairs.push_back(solve_pair(g.copy(k)));
      const Verdict v = cert.pairs.back().outcome.verdict;
      if (v == Verdict::kSat) {
        cert.verdict = Theorem1Verdict::kRefuted;
        cert.note = "pair " + std::to_string(k) + " extends to an m-fold coloring";
        return cert;
      }
      timeout = timeout || v != Verdict::kUnsat;
    }
    cert.verdict = timeout ? Theorem1Verdict::kInconclusive : Theorem1Verdict::kBlocked;
    if (timeout) cert.note = "some extension checks ran out of budget";
    return cert;
  }

  CopyPair rep = representative_pair(params.m);
  rep.index = rank_subset(g.list_size, rep.phi_u) * g.p.convert_to<std::uint64_t>() +
              rank_subset(g.list_size, rep.phi_v);
  cert.pairs.push_back(solve_pair(rep));
  const Verdict v = cert.pairs.back().outcome.verdict;
  if (v == Verdict::kSat) {
    cert.verdict = Theorem1Verdict::kRefuted;
    cert.note = "the representative pair extends to an m-fold coloring";
    return cert;
  }

  const bool fits = g.copies <= cap;
  const std::uint64_t recorded = fits ? g.copy_count() : cap;
  cert.relabeling_complete = fits;
  for (std::uint64_t k = 0; k < recorded; ++k) {
    RelabelRecord rec = relabeling_for(g.copy(k), g.list_size);
    auto ok = check_relabeling(h, rec);
    if (!ok) {
      cert.verdict = Theorem1Verdict::kInconclusive;
      cert.note = ok.reason;
      return cert;
    }
    cert.relabeling.push_back(std::move(rec));
  }
  if (v != Verdict::kUnsat) {
    cert.verdict = Theorem1Verdict::kInconclusive;
    cert.note = "the representative extension check ran out of budget";
    return cert;
  }
  cert.verdict = Theorem1Verdict::kBlocked;
  if (!fits) cert.note = "relabeling recorded for the first " + std::to_string(cap) + " pairs";
  return cert;
}

}  // namespace listfold
