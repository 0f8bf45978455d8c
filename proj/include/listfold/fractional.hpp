#pragma once

#include <optional>
#include <string>
#include <vector>

#include "listfold/graph.hpp"
#include "listfold/rational.hpp"
#include "listfold/solver.hpp"

namespace listfold {

/// (a,b)-colorability: solve with every list equal to {1..a}, held as one
/// color block "K" of size a.
SolveOutcome colorable_ab(const Graph& g, int a, int b, const Budget& budget = {},
                          const SolveOptions& options = {});

inline constexpr int kMaxIndependenceOrder = 40;

/// Exact independence number by branch and bound. Throws GraphError above
/// kMaxIndependenceOrder vertices.
int independence_number(const Graph& g);

struct SweepPoint {
  int a = 0;
  int b = 0;
  Verdict verdict = Verdict::kTimeout;
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
};

struct ChiFBounds {
  Rational lower{0};                  // n / alpha
  std::optional<Rational> upper;      // best a/b found SAT
  std::optional<int> best_a;
  std::optional<int> best_b;
  std::optional<MultiColoring> witness;  // the (best_a, best_b)-coloring
  std::vector<SweepPoint> points;     // every solver run, in sweep order
  /// True when each b's minimal a was pinned without a timeout.
  bool exact_per_b = true;
};

/// For b = 1..max_b, bisects the least SAT a between ceil(b n / alpha) and
/// b (degeneracy + 1).
ChiFBounds chi_f_bounds(const Graph& g, int max_b, const Budget& budget = {});

/// 9n / (3n + 1): the fractional chromatic upper bound for n-vertex
/// triangle-free planar graphs.
Rational triangle_free_planar_bound(int n);

std::string sweep_to_csv(const std::vector<SweepPoint>& points);

}  // namespace listfold
