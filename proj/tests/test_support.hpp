#pragma once

// Independent oracles and generators for the unit and acceptance suites.
// Nothing here calls into the solver or the structural algorithms it checks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "listfold/color.hpp"
#include "listfold/graph.hpp"

namespace listfold::testing {

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, es);
}

/// Every vertex gets the same list {K:0..a-1}.
inline ListAssignment uniform_lists(const Graph& g, int a) {
  auto u = ColorUniverse::build({{"K", a}});
  return ListAssignment(u, std::vector<ColorSet>(g.order(), u.block_colors(0)));
}

/// Shortest cycle by enumerating simple paths from every start vertex.
inline std::optional<int> girth_by_enumeration(const Graph& g) {
  int best = -1;
  const int n = g.order();
  std::vector<char> on(n, 0);
  std::vector<Vertex> path;
  auto dfs = [&](auto&& self, Vertex start, Vertex at) -> void {
    for (Vertex w : g.neighbors(at)) {
      if (w == start && path.size() >= 3) {
        if (best < 0 || static_cast<int>(path.size()) < best) best = static_cast<int>(path.size());
      }
      if (on[w] || w < start) continue;
      if (best > 0 && static_cast<int>(path.size()) + 1 >= best) continue;
      on[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    path = {s};
    dfs(dfs, s, s);
    on[s] = 0;
  }
  if (best < 0) return std::nullopt;
  return best;
}

/// Independence number by enumerating all vertex subsets (n <= 20).
inline int alpha_by_enumeration(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& [a, b] : g.edges()) {
      if ((mask >> a & 1u) && (mask >> b & 1u)) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

struct RandomInstance {
  Graph graph;
  ListAssignment lists;
  int b = 1;
};

/// n <= max_n vertices, edge probability in [0.2, 0.7], lists of size a <= max_a
/// drawn from a pool of at most max_a + 3 colors, fold b <= max_b.
inline RandomInstance random_instance(std::mt19937_64& rng, int max_n = 8, int max_a = 4, int max_b = 2) {
  std::uniform_int_distribution<int> n_dist(1, max_n);
  std::uniform_int_distribution<int> a_dist(1, max_a);
  std::uniform_int_distribution<int> b_dist(1, max_b);
  std::uniform_real_distribution<double> p_dist(0.2, 0.7);
  const int n = n_dist(rng);
  const int a = a_dist(rng);
  const int b = b_dist(rng);
  const double p = p_dist(rng);
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) es.emplace_back(i, j);
    }
  }
  const int pool = a + std::uniform_int_distribution<int>(0, 3)(rng);
  auto u = ColorUniverse::build({{"K", pool}});
  std::vector<ColorSet> lists;
  std::vector<ColorId> all = u.block_colors(0);
  for (int i = 0; i < n; ++i) {
    std::shuffle(all.begin(), all.end(), rng);
    lists.push_back(make_color_set(std::vector<ColorId>(all.begin(), all.begin() + a)));
  }
  return {Graph::from_edges(n, es), ListAssignment(u, std::move(lists)), b};
}

/// Random permutation of the universe that maps each color inside its
/// orbit (colors with identical list membership).
inline std::vector<ColorId> random_orbit_permutation(const Graph& g, const ListAssignment& lists,
                                                     std::mt19937_64& rng) {
  const int size = lists.universe().size();
  std::vector<std::vector<Vertex>> signature(size);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (ColorId c : lists.list(v)) signature[c].push_back(v);
  }
  std::vector<ColorId> perm(size);
  std::vector<char> done(size, 0);
  for (ColorId c = 0; c < size; ++c) {
    if (done[c]) continue;
    std::vector<ColorId> cls;
    for (ColorId d = c; d < size; ++d) {
      if (!done[d] && signature[d] == signature[c]) cls.push_back(d);
    }
    std::vector<ColorId> image = cls;
    std::shuffle(image.begin(), image.end(), rng);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      perm[cls[i]] = image[i];
      done[cls[i]] = 1;
    }
  }
  return perm;
}

}  // namespace listfold::testing
