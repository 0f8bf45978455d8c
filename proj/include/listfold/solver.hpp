#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "listfold/color.hpp"
#include "listfold/graph.hpp"

namespace listfold {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict {
  kSat,
  kUnsat,
  kTimeout,
  /// The degeneracy greedy got stuck. Says nothing about colorability.
  kGreedyFailed,
};

std::string_view to_string(Verdict v);

/// Node and wall-clock limits; unset means unlimited.
struct Budget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;

  static Budget unlimited() { return {}; }
  static Budget nodes(std::uint64_t n) { return {n, std::nullopt}; }
  static Budget seconds(double s) {
    return {std::nullopt, std::chrono::milliseconds(static_cast<long long>(s * 1000.0))};
  }
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes_shortfall = 0;   // some list dropped below b colors
  std::uint64_t prunes_odd_cycle = 0;   // counting cut on an induced odd cycle
  double wall_ms = 0.0;

  SolveStats& operator+=(const SolveStats& o) {
    nodes += o.nodes;
    prunes_shortfall += o.prunes_shortfall;
    prunes_odd_cycle += o.prunes_odd_cycle;
    wall_ms += o.wall_ms;
    return *this;
  }
};

struct SolveOutcome {
  Verdict verdict = Verdict::kTimeout;
  std::optional<MultiColoring> witness;  // present iff verdict == kSat
  SolveStats stats;
};

/// Colors sharing one list-membership signature. Any permutation inside an
/// orbit maps list-respecting colorings to list-respecting colorings.
struct ColorOrbit {
  std::vector<Vertex> signature;
  std::vector<ColorId> members;
  bool operator==(const ColorOrbit&) const = default;
};

/// Partition of the colors that occur in some list, ordered by smallest member.
std::vector<ColorOrbit> color_orbits(const Graph& g, const ListAssignment& lists);

struct SolveOptions {
  /// Only the lowest unused color of each orbit is branched on.
  bool orbit_symmetry = true;
  /// Prune when an induced odd cycle cannot be b-fold colored from what is
  /// left in its lists (each color covers at most k vertices of a (2k+1)-cycle).
  bool odd_cycle_cut = false;
  int odd_cycle_max_length = 7;
  /// Worker threads for splitting the root branching; 1 = sequential.
  int threads = 1;
  /// Randomised vertex tie-breaking for stress harnesses; unset = role order.
  std::optional<std::uint64_t> seed;
};

/// Exact decision of b-fold L-colorability. SAT carries a witness accepted
/// by verify_coloring; UNSAT only after exhausting the reduced search space;
/// TIMEOUT when the budget runs out. Throws SolverError when more than
/// kMaxSolverColors distinct colors occur in the lists.
SolveOutcome solve(const Graph& g, const ListAssignment& lists, int b, const Budget& budget = {},
                   const SolveOptions& options = {});

inline constexpr int kMaxSolverColors = 256;

/// Reference oracle: plain backtracking over all b-subsets per vertex in
/// position order, no symmetry reduction and no forward checking. Throws
/// SolverError when the product of per-vertex subset counts exceeds `cap`.
SolveOutcome brute_force_solve(const Graph& g, const ListAssignment& lists, int b, const Budget& budget = {},
                               double cap = 1e8);

/// Colors in reverse degeneracy order taking the lowest b free colors.
/// Always succeeds when every |L(v)| >= b * (degeneracy + 1).
SolveOutcome greedy_degenerate_solve(const Graph& g, const ListAssignment& lists, int b);

/// Visits every b-fold L-coloring (plain enumeration). The callback returns
/// false to stop early. Returns the number of colorings visited, or nullopt
/// when the budget ran out first.
std::optional<std::uint64_t> for_each_coloring(const Graph& g, const ListAssignment& lists, int b,
                                               const std::function<bool(const MultiColoring&)>& visit,
                                               const Budget& budget = {});

/// Chordless odd cycles of length <= max_length, each listed once starting
/// from its smallest vertex.
std::vector<std::vector<Vertex>> induced_odd_cycles(const Graph& g, int max_length);

}  // namespace listfold
