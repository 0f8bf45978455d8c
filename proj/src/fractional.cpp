#include "listfold/fractional.hpp"

#include <bit>
#include <sstream>

namespace listfold {

SolveOutcome colorable_ab(const Graph& g, int a, int b, const Budget& budget, const SolveOptions& options) {
  if (a < 1 || b < 1) throw SolverError("(a,b)-coloring needs a, b >= 1");
  auto universe = ColorUniverse::build({{"K", a}});
  std::vector<ColorSet> lists(g.order(), universe.block_colors(0));
  return solve(g, ListAssignment(std::move(universe), std::move(lists)), b, budget, options);
}

namespace {

using Mask = std::uint64_t;

void grow_independent(const std::vector<Mask>& adj, Mask candidates, int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  const int v = std::countr_zero(candidates);
  const Mask bit = Mask{1} << v;
  grow_independent(adj, candidates & ~adj[v] & ~bit, size + 1, best);
  // Skipping v only helps if v has a neighbour among the candidates.
  if ((adj[v] & candidates) != 0) grow_independent(adj, candidates & ~bit, size, best);
}

}  // namespace

int independence_number(const Graph& g) {
  if (g.order() > kMaxIndependenceOrder) {
    throw GraphError("independence number is limited to " + std::to_string(kMaxIndependenceOrder) + " vertices");
  }
  std::vector<Mask> adj(g.order(), 0);
  for (const auto& [a, b] : g.edges()) {
    adj[a] |= Mask{1} << b;
    adj[b] |= Mask{1} << a;
  }
  const Mask all = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  int best = 0;
  grow_independent(adj, all, 0, best);
  return best;
}

Rational triangle_free_planar_bound(int n) { return Rational(9LL * n, 3LL * n + 1); }

ChiFBounds chi_f_bounds(const Graph& g, int max_b, const Budget& budget) {
  ChiFBounds out;
  const int n = g.order();
  if (n == 0) {
    out.lower = 0;
    return out;
  }
  const int alpha = independence_number(g);
  out.lower = Rational(n, alpha);
  const int d = degeneracy_order(g).degeneracy;

  for (int b = 1; b <= max_b; ++b) {
    // a >= b * n / alpha is necessary; a = b (d + 1) always works greedily.
    long long lo = (static_cast<long long>(b) * n + alpha - 1) / alpha;
    long long hi = static_cast<long long>(b) * (d + 1);
    std::optional<MultiColoring> hi_witness;
    bool hi_known = false;
    bool clean = true;
    while (lo < hi) {
      const long long mid = lo + (hi - lo) / 2;
      SolveOutcome r = colorable_ab(g, static_cast<int>(mid), b, budget);
      out.points.push_back({static_cast<int>(mid), b, r.verdict, r.stats.nodes, r.stats.wall_ms});
      if (r.verdict == Verdict::kSat) {
        hi = mid;
        hi_witness = std::move(r.witness);
        hi_known = true;
      } else if (r.verdict == Verdict::kUnsat) {
        lo = mid + 1;
      } else {
        // Cannot tell on this side; keep the certified upper end.
        clean = false;
        lo = mid + 1;
      }
    }
    if (!hi_known) {
      SolveOutcome r = colorable_ab(g, static_cast<int>(hi), b, budget);
      out.points.push_back({static_cast<int>(hi), b, r.verdict, r.stats.nodes, r.stats.wall_ms});
      if (r.verdict != Verdict::kSat) {
        out.exact_per_b = false;
        continue;
      }
      hi_witness = std::move(r.witness);
    }
    out.exact_per_b = out.exact_per_b && clean;
    const Rational ratio(hi, b);
    if (!out.upper || ratio < *out.upper) {
      out.upper = ratio;
      out.best_a = static_cast<int>(hi);
      out.best_b = b;
      out.witness = std::move(hi_witness);
    }
  }
  return out;
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points) {
  std::ostringstream out;
  out << "a,b,verdict,nodes,time_ms\n";
  for (const auto& p : points) {
    out << p.a << ',' << p.b << ',' << to_string(p.verdict) << ',' << p.nodes << ',' << p.wall_ms << '\n';
  }
  return out.str();
}

}  // namespace listfold
