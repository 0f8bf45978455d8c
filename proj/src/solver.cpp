#include "listfold/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <climits>
#include <map>
#include <mutex>
#include <random>
#include <thread>

namespace listfold {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSat: return "SAT";
    case Verdict::kUnsat: return "UNSAT";
    case Verdict::kTimeout: return "TIMEOUT";
    case Verdict::kGreedyFailed: return "GREEDY_FAILED";
  }
  return "?";
}

std::vector<ColorOrbit> color_orbits(const Graph& g, const ListAssignment& lists) {
  lists.check_covers(g);
  std::map<ColorId, std::vector<Vertex>> signature;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (ColorId c : lists.list(v)) signature[c].push_back(v);
  }
  std::map<std::vector<Vertex>, std::vector<ColorId>> grouped;
  for (auto& [c, sig] : signature) grouped[sig].push_back(c);

  std::vector<ColorOrbit> orbits;
  for (auto& [sig, members] : grouped) orbits.push_back({sig, members});
  std::sort(orbits.begin(), orbits.end(),
            [](const ColorOrbit& a, const ColorOrbit& b) { return a.members.front() < b.members.front(); });
  return orbits;
}

std::vector<std::vector<Vertex>> induced_odd_cycles(const Graph& g, int max_length) {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> path;
  std::vector<char> on_path(g.order(), 0);

  std::function<void()> extend = [&]() {
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w <= s || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(w, path[i]);
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent(w, s)) {
        const int len = static_cast<int>(path.size()) + 1;
        if (len % 2 == 1 && len <= max_length && path[1] < w) {
          cycles.push_back(path);
          cycles.back().push_back(w);
        }
        continue;
      }
      if (static_cast<int>(path.size()) + 1 < max_length) {
        path.push_back(w);
        on_path[w] = 1;
        extend();
        on_path[w] = 0;
        path.pop_back();
      }
    }
  };

  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    on_path[s] = 1;
    extend();
    on_path[s] = 0;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

namespace {

using Bits = std::bitset<kMaxSolverColors>;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

/// Colors that occur in some list, renumbered 0..count-1.
struct CompactLists {
  std::vector<ColorId> to_universe;
  std::vector<Bits> lists;
  int count = 0;
};

CompactLists compact(const Graph& g, const ListAssignment& lists) {
  lists.check_covers(g);
  std::vector<ColorId> present;
  for (const auto& l : lists.lists()) present.insert(present.end(), l.begin(), l.end());
  present = make_color_set(std::move(present));
  if (static_cast<int>(present.size()) > kMaxSolverColors) {
    throw SolverError("instance uses " + std::to_string(present.size()) + " colors; the solver supports at most " +
                      std::to_string(kMaxSolverColors));
  }
  CompactLists out;
  out.to_universe = present;
  out.count = static_cast<int>(present.size());
  out.lists.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (ColorId c : lists.list(v)) {
      auto pos = std::lower_bound(present.begin(), present.end(), c) - present.begin();
      out.lists[v].set(static_cast<std::size_t>(pos));
    }
  }
  return out;
}

ColorSet expand(const CompactLists& cl, const Bits& bits) {
  ColorSet s;
  for (int c = 0; c < cl.count; ++c) {
    if (bits[c]) s.push_back(cl.to_universe[c]);
  }
  return s;
}

MultiColoring to_coloring(const CompactLists& cl, int b, const std::vector<Bits>& assigned) {
  MultiColoring phi{b, {}};
  for (const auto& a : assigned) phi.phi.push_back(expand(cl, a));
  return phi;
}

/// Shared node/time accounting; safe across worker threads.
class Governor {
 public:
  explicit Governor(const Budget& budget) : budget_(budget), start_(Clock::now()) {}

  /// Counts one node; false once the budget is exhausted.
  bool tick() {
    if (expired_.load(std::memory_order_relaxed)) return false;
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_.max_nodes && n > *budget_.max_nodes) {
      expired_ = true;
      return false;
    }
    if (budget_.max_time && (n & 255u) == 0 && Clock::now() - start_ > *budget_.max_time) {
      expired_ = true;
      return false;
    }
    return true;
  }

  bool expired() const { return expired_.load(); }
  Clock::time_point start() const { return start_; }

 private:
  Budget budget_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> expired_{false};
};

enum class Status { kFound, kExhausted, kOutOfBudget, kCancelled };

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Forward-checking backtracking search over b-subsets.
class Search {
 public:
  Search(const Graph& g, const CompactLists& cl, int b, const SolveOptions& options,
         const std::vector<ColorOrbit>& orbits, const std::vector<int>& priority,
         const std::vector<std::vector<Vertex>>& cycles, Governor& governor)
      : g_(g), cl_(cl), b_(b), options_(options), priority_(priority), cycles_(cycles), governor_(governor) {
    const int n = g.order();
    avail_ = cl.lists;
    assigned_.assign(n, Bits{});
    colored_.assign(n, 0);
    orbit_of_.assign(cl.count, -1);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      for (ColorId c : orbits[o].members) {
        auto pos = std::lower_bound(cl.to_universe.begin(), cl.to_universe.end(), c) - cl.to_universe.begin();
        orbit_of_[pos] = static_cast<int>(o);
      }
    }
    cycles_at_.assign(n, {});
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (Vertex v : cycles[i]) cycles_at_[v].push_back(static_cast<int>(i));
    }
    cycle_stamp_.assign(cycles.size(), 0);
  }

  void set_cancel(const std::atomic<int>* best, int index) {
    cancel_best_ = best;
    cancel_index_ = index;
  }

  /// Shortfall check on the untouched lists.
  bool root_feasible() {
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (static_cast<int>(avail_[v].count()) < b_) {
        ++stats_.prunes_shortfall;
        return false;
      }
    }
    if (options_.odd_cycle_cut) {
      for (std::size_t i = 0; i < cycles_.size(); ++i) {
        if (!cycle_feasible(cycles_[i])) {
          ++stats_.prunes_odd_cycle;
          return false;
        }
      }
    }
    return true;
  }

  /// Uncolored vertex with fewest remaining colors; -1 when all are colored.
  Vertex pick() const {
    Vertex best = -1;
    std::size_t best_count = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (colored_[v]) continue;
      const std::size_t count = avail_[v].count();
      if (best < 0 || count < best_count || (count == best_count && priority_[v] < priority_[best])) {
        best = v;
        best_count = count;
      }
    }
    return best;
  }

  /// b-subsets of avail(v); with orbit symmetry, unused colors of an orbit
  /// are taken lowest-first.
  std::vector<Bits> choices(Vertex v) const {
    std::vector<int> cand;
    std::vector<int> prev_fresh;
    std::vector<int> last_fresh_in_orbit;
    if (options_.orbit_symmetry) last_fresh_in_orbit.assign(cl_.count, -1);
    for (int c = 0; c < cl_.count; ++c) {
      if (!avail_[v][c]) continue;
      int prev = -1;
      if (options_.orbit_symmetry && !used_[c]) {
        int o = orbit_of_[c];
        prev = last_fresh_in_orbit[o];
        last_fresh_in_orbit[o] = static_cast<int>(cand.size());
      }
      cand.push_back(c);
      prev_fresh.push_back(prev);
    }

    std::vector<Bits> out;
    std::vector<char> taken(cand.size(), 0);
    Bits current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int need) {
      if (need == 0) {
        out.push_back(current);
        return;
      }
      if (cand.size() - i < static_cast<std::size_t>(need)) return;
      const int c = cand[i];
      if (prev_fresh[i] < 0 || taken[prev_fresh[i]]) {
        taken[i] = 1;
        current.set(c);
        rec(i + 1, need - 1);
        current.reset(c);
        taken[i] = 0;
      }
      rec(i + 1, need);
    };
    rec(0, b_);
    return out;
  }

  std::size_t mark() const { return trail_.size(); }

  /// Colors v with s and forward-checks. Returns false on a prune; the
  /// caller must still undo to the mark taken before the call.
  bool assign(Vertex v, const Bits& s) {
    trail_.push_back({v, s, used_, true});
    colored_[v] = 1;
    assigned_[v] = s;
    used_ |= s;
    bool ok = true;
    for (Vertex w : g_.neighbors(v)) {
      if (colored_[w]) continue;
      Bits removed = avail_[w] & s;
      if (removed.none()) continue;
      avail_[w] &= ~s;
      trail_.push_back({w, removed, {}, false});
      if (ok && static_cast<int>(avail_[w].count()) < b_) {
        ++stats_.prunes_shortfall;
        ok = false;
      }
    }
    if (ok && options_.odd_cycle_cut && !cycles_.empty()) ok = cycles_ok_around(v);
    return ok;
  }

  void undo(std::size_t to) {
    while (trail_.size() > to) {
      Entry e = std::move(trail_.back());
      trail_.pop_back();
      if (e.is_assignment) {
        colored_[e.v] = 0;
        assigned_[e.v].reset();
        used_ = e.used_before;
      } else {
        avail_[e.v] |= e.bits;
      }
    }
  }

  Status dfs() {
    if (cancelled()) return Status::kCancelled;
    if (!governor_.tick()) return Status::kOutOfBudget;
    ++stats_.nodes;
    const Vertex v = pick();
    if (v < 0) {
      solution_ = assigned_;
      return Status::kFound;
    }
    for (const Bits& s : choices(v)) {
      const std::size_t m = mark();
      Status st = assign(v, s) ? dfs() : Status::kExhausted;
      undo(m);
      if (st != Status::kExhausted) return st;
    }
    return Status::kExhausted;
  }

  const std::vector<Bits>& solution() const { return solution_; }
  SolveStats& stats() { return stats_; }

 private:
  struct Entry {
    Vertex v;
    Bits bits;
    Bits used_before;
    bool is_assignment;
  };

  bool cancelled() const {
    return cancel_best_ != nullptr && cancel_best_->load(std::memory_order_relaxed) < cancel_index_;
  }

  bool cycle_feasible(const std::vector<Vertex>& cycle) const {
    const int len = static_cast<int>(cycle.size());
    const int k = (len - 1) / 2;
    std::vector<int> count(cl_.count, 0);
    for (Vertex u : cycle) {
      const Bits& possible = colored_[u] ? assigned_[u] : avail_[u];
      for (int c = 0; c < cl_.count; ++c) count[c] += possible[c] ? 1 : 0;
    }
    long supply = 0;
    for (int c = 0; c < cl_.count; ++c) supply += std::min(k, count[c]);
    return supply >= static_cast<long>(b_) * len;
  }

  bool cycles_ok_around(Vertex v) {
    ++stamp_;
    auto check = [&](Vertex u) {
      for (int ci : cycles_at_[u]) {
        if (cycle_stamp_[ci] == stamp_) continue;
        cycle_stamp_[ci] = stamp_;
        if (!cycle_feasible(cycles_[ci])) return false;
      }
      return true;
    };
    bool ok = check(v);
    for (Vertex w : g_.neighbors(v)) ok = ok && check(w);
    if (!ok) ++stats_.prunes_odd_cycle;
    return ok;
  }

  const Graph& g_;
  const CompactLists& cl_;
  int b_;
  const SolveOptions& options_;
  const std::vector<int>& priority_;
  const std::vector<std::vector<Vertex>>& cycles_;
  Governor& governor_;

  std::vector<Bits> avail_;
  std::vector<Bits> assigned_;
  std::vector<char> colored_;
  Bits used_;
  std::vector<int> orbit_of_;
  std::vector<std::vector<int>> cycles_at_;
  std::vector<std::uint64_t> cycle_stamp_;
  std::uint64_t stamp_ = 0;
  std::vector<Entry> trail_;
  std::vector<Bits> solution_;
  SolveStats stats_;
  const std::atomic<int>* cancel_best_ = nullptr;
  int cancel_index_ = 0;
};

void check_fold(int b) {
  if (b < 1) throw SolverError("fold b must be positive, got " + std::to_string(b));
}

SolveOutcome finish(const Graph& g, const ListAssignment& lists, int b, Verdict verdict,
                    std::optional<MultiColoring> witness, SolveStats stats, Clock::time_point start) {
  if (verdict == Verdict::kSat) {
    auto check = verify_coloring(g, lists, *witness);
    if (!check) throw std::logic_error("solver produced an invalid witness: " + check.reason);
  }
  stats.wall_ms = elapsed_ms(start);
  (void)b;
  return {verdict, std::move(witness), stats};
}

}  // namespace

SolveOutcome solve(const Graph& g, const ListAssignment& lists, int b, const Budget& budget,
                   const SolveOptions& options) {
  check_fold(b);
  const auto start = Clock::now();
  const CompactLists cl = compact(g, lists);
  const auto orbits = color_orbits(g, lists);

  std::vector<int> priority(g.order());
  for (Vertex v = 0; v < g.order(); ++v) priority[v] = v;
  if (options.seed) {
    std::mt19937_64 rng(*options.seed);
    std::shuffle(priority.begin(), priority.end(), rng);
  }
  std::vector<std::vector<Vertex>> cycles;
  if (options.odd_cycle_cut) cycles = induced_odd_cycles(g, options.odd_cycle_max_length);

  Governor governor(budget);
  Search root(g, cl, b, options, orbits, priority, cycles, governor);
  if (!root.root_feasible()) {
    return finish(g, lists, b, Verdict::kUnsat, std::nullopt, root.stats(), start);
  }

  if (options.threads <= 1) {
    Status st = root.dfs();
    switch (st) {
      case Status::kFound:
        return finish(g, lists, b, Verdict::kSat, to_coloring(cl, b, root.solution()), root.stats(), start);
      case Status::kExhausted:
        return finish(g, lists, b, Verdict::kUnsat, std::nullopt, root.stats(), start);
      default:
        return finish(g, lists, b, Verdict::kTimeout, std::nullopt, root.stats(), start);
    }
  }

  // Parallel: each root choice is an independent subtree. The SAT witness
  // with the smallest subtree index wins.
  if (!governor.tick()) return finish(g, lists, b, Verdict::kTimeout, std::nullopt, root.stats(), start);
  ++root.stats().nodes;
  const Vertex v = root.pick();
  if (v < 0) return finish(g, lists, b, Verdict::kSat, to_coloring(cl, b, {}), root.stats(), start);
  const std::vector<Bits> branches = root.choices(v);

  std::atomic<int> next{0};
  std::atomic<int> best_sat{INT_MAX};
  std::mutex mu;
  std::vector<Status> status(branches.size(), Status::kCancelled);
  std::vector<std::vector<Bits>> solutions(branches.size());
  SolveStats total = root.stats();

  auto worker = [&]() {
    Search local(g, cl, b, options, orbits, priority, cycles, governor);
    SolveStats mine;
    for (int i = next++; i < static_cast<int>(branches.size()); i = next++) {
      if (best_sat.load() < i) continue;
      local.set_cancel(&best_sat, i);
      const std::size_t m = local.mark();
      Status st = local.assign(v, branches[i]) ? local.dfs() : Status::kExhausted;
      if (st == Status::kFound) {
        solutions[i] = local.solution();
        int cur = best_sat.load();
        while (i < cur && !best_sat.compare_exchange_weak(cur, i)) {
        }
      }
      local.undo(m);
      status[i] = st;
    }
    mine = local.stats();
    std::lock_guard<std::mutex> lock(mu);
    total += mine;
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  const int winner = best_sat.load();
  if (winner != INT_MAX) {
    return finish(g, lists, b, Verdict::kSat, to_coloring(cl, b, solutions[winner]), total, start);
  }
  const bool all_exhausted =
      std::all_of(status.begin(), status.end(), [](Status s) { return s == Status::kExhausted; });
  return finish(g, lists, b, all_exhausted ? Verdict::kUnsat : Verdict::kTimeout, std::nullopt, total, start);
}

namespace {

/// Lexicographic b-subsets of a bitset's members.
std::vector<Bits> subsets_of(const Bits& list, int count, int b) {
  std::vector<int> members;
  for (int c = 0; c < count; ++c) {
    if (list[c]) members.push_back(c);
  }
  std::vector<Bits> out;
  if (static_cast<int>(members.size()) < b) return out;
  std::vector<int> idx(b);
  for (int i = 0; i < b; ++i) idx[i] = i;
  while (true) {
    Bits s;
    for (int i : idx) s.set(members[i]);
    out.push_back(s);
    int i = b - 1;
    while (i >= 0 && idx[i] == static_cast<int>(members.size()) - b + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < b; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Plain enumeration in position order. `on_leaf` returns true to stop.
Status enumerate(const Graph& g, const CompactLists& cl, int b, Governor& governor, SolveStats& stats,
                 const std::function<bool(const std::vector<Bits>&)>& on_leaf) {
  const int n = g.order();
  std::vector<std::vector<Bits>> options(n);
  for (Vertex v = 0; v < n; ++v) options[v] = subsets_of(cl.lists[v], cl.count, b);
  std::vector<Bits> assigned(n);

  std::function<Status(Vertex)> rec = [&](Vertex v) -> Status {
    if (!governor.tick()) return Status::kOutOfBudget;
    ++stats.nodes;
    if (v == n) return on_leaf(assigned) ? Status::kFound : Status::kExhausted;
    for (const Bits& s : options[v]) {
      bool clash = false;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && (assigned[w] & s).any()) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      assigned[v] = s;
      Status st = rec(v + 1);
      if (st != Status::kExhausted) return st;
    }
    assigned[v].reset();
    return Status::kExhausted;
  };
  return rec(0);
}

}  // namespace

SolveOutcome brute_force_solve(const Graph& g, const ListAssignment& lists, int b, const Budget& budget,
                               double cap) {
  check_fold(b);
  const auto start = Clock::now();
  const CompactLists cl = compact(g, lists);
  double product = 1.0;
  for (Vertex v = 0; v < g.order(); ++v) {
    product *= static_cast<double>(choose(static_cast<int>(cl.lists[v].count()), b));
  }
  if (product > cap) {
    throw SolverError("brute force refuses to enumerate " + std::to_string(product) + " combinations (cap " +
                      std::to_string(cap) + ")");
  }
  Governor governor(budget);
  SolveStats stats;
  std::vector<Bits> found;
  Status st = enumerate(g, cl, b, governor, stats, [&](const std::vector<Bits>& a) {
    found = a;
    return true;
  });
  if (st == Status::kFound) return finish(g, lists, b, Verdict::kSat, to_coloring(cl, b, found), stats, start);
  if (st == Status::kExhausted) return finish(g, lists, b, Verdict::kUnsat, std::nullopt, stats, start);
  return finish(g, lists, b, Verdict::kTimeout, std::nullopt, stats, start);
}

std::optional<std::uint64_t> for_each_coloring(const Graph& g, const ListAssignment& lists, int b,
                                               const std::function<bool(const MultiColoring&)>& visit,
                                               const Budget& budget) {
  check_fold(b);
  const CompactLists cl = compact(g, lists);
  Governor governor(budget);
  SolveStats stats;
  std::uint64_t visited = 0;
  Status st = enumerate(g, cl, b, governor, stats, [&](const std::vector<Bits>& a) {
    ++visited;
    return !visit(to_coloring(cl, b, a));
  });
  if (st == Status::kOutOfBudget) return std::nullopt;
  return visited;
}

SolveOutcome greedy_degenerate_solve(const Graph& g, const ListAssignment& lists, int b) {
  check_fold(b);
  const auto start = Clock::now();
  lists.check_covers(g);
  const DegeneracyOrder order = degeneracy_order(g);
  MultiColoring phi{b, std::vector<ColorSet>(g.order())};
  SolveStats stats;
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    const Vertex v = *it;
    ++stats.nodes;
    ColorSet blocked;
    for (Vertex w : g.neighbors(v)) blocked.insert(blocked.end(), phi.phi[w].begin(), phi.phi[w].end());
    blocked = make_color_set(std::move(blocked));
    ColorSet chosen;
    for (ColorId c : lists.list(v)) {
      if (static_cast<int>(chosen.size()) == b) break;
      if (!std::binary_search(blocked.begin(), blocked.end(), c)) chosen.push_back(c);
    }
    if (static_cast<int>(chosen.size()) < b) {
      ++stats.prunes_shortfall;
      return finish(g, lists, b, Verdict::kGreedyFailed, std::nullopt, stats, start);
    }
    phi.phi[v] = std::move(chosen);
  }
  return finish(g, lists, b, Verdict::kSat, std::move(phi), stats, start);
}

}  // namespace listfold
