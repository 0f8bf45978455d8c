#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "listfold/color.hpp"
#include "listfold/graph.hpp"
#include "listfold/solver.hpp"

namespace listfold {

using BigInt = boost::multiprecision::cpp_int;

class GadgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The shipped transcription of the gadget (data/gadget_h.json): vertices
/// with roles, edges and a planar rotation system.
std::string_view gadget_h_data();
Graph gadget_graph();
EmbeddingCertificate gadget_embedding();

struct GadgetH {
  Graph graph;
  FoldParams params;
  int e = 0;  // E-block size actually used by the lists
  ListAssignment lists;
  EmbeddingCertificate embedding;
};

/// Validates the transcription (roles in canonical order, girth >= 4,
/// E <= 2V - 4, embedding accepted) and attaches the gadget lists. Throws
/// GadgetError on any structural failure.
GadgetH build_H(const FoldParams& params, std::optional<int> e_override = std::nullopt);

BigInt binomial(int n, int k);

/// Lexicographic rank <-> k-subset of {0..n-1}.
std::vector<int> unrank_subset(int n, int k, std::uint64_t rank);
std::uint64_t rank_subset(int n, std::span<const int> subset);

/// One coloring of (u, v): m-subsets of X and Y given as block indices.
struct CopyPair {
  std::uint64_t index = 0;
  std::vector<int> phi_u;
  std::vector<int> phi_v;
};

inline constexpr std::uint64_t kDefaultExplicitCap = 100;

/// p^2 copies of H glued at u and v. Copy k corresponds to the pair
/// (phi_u rank k / p, phi_v rank k % p).
struct ComposedGadget {
  FoldParams params;
  int list_size = 0;      // 3m + eps*m, the size of X and Y
  int h_vertices = 0;
  int h_edges = 0;
  BigInt p;
  BigInt copies;          // p^2
  BigInt vertex_count;    // 2 + (|V(H)| - 2) p^2
  BigInt edge_count;      // |E(H)| p^2
  ColorUniverse uv_universe;  // blocks X, Y
  /// Present in explicit mode only.
  std::optional<Graph> graph;
  std::optional<ListAssignment> lists;

  bool is_explicit() const { return graph.has_value(); }
  /// Throws GadgetError when p^2 does not fit in 64 bits or k >= p^2.
  CopyPair copy(std::uint64_t k) const;
  std::uint64_t copy_count() const;
};

/// Throws GadgetError when explicit materialisation would exceed `cap` copies.
ComposedGadget build_G(const FoldParams& params, bool explicit_graph, std::uint64_t cap = kDefaultExplicitCap);

/// Universe X, Y (3m+e each), C (m), D (2m), E (e) for one copy.
ColorUniverse copy_universe(int m, int e);

/// The gadget lists of one copy with A := phi_u (inside X) and B := phi_v
/// (inside Y), fresh C, D, E. Throws GadgetError unless both subsets have m
/// distinct in-range indices.
ListAssignment instantiate_copy_lists(const GadgetH& h, std::span<const int> phi_u, std::span<const int> phi_v);

/// Color bijection of copy_universe sending the representative pair's
/// lists onto `pair`'s lists: X and Y permuted, C, D, E fixed.
struct RelabelRecord {
  std::uint64_t pair = 0;
  std::vector<int> phi_u;
  std::vector<int> phi_v;
  std::vector<int> x_perm;  // x_perm[i] = image of X:i
  std::vector<int> y_perm;
};

CopyPair representative_pair(int m);
RelabelRecord relabeling_for(const CopyPair& pair, int list_size);
/// Full permutation of copy_universe(m, e) built from a record.
std::vector<ColorId> relabel_permutation(const RelabelRecord& rec, int m, int e);
/// Independent check that the record is a bijection mapping the
/// representative copy's lists exactly onto the pair's lists.
CheckResult check_relabeling(const GadgetH& h, const RelabelRecord& rec);

/// Solver configuration used for gadget runs (odd-cycle cut on).
SolveOptions gadget_solve_options();

struct Lemma1Result {
  FoldParams params;
  SolveOutcome tight;   // e = eps*m, expected UNSAT
  SolveOutcome loose;   // e = ceil(m/17), expected SAT
  int tight_list_size = 0;
  int loose_list_size = 0;
};

Lemma1Result verify_lemma1(const FoldParams& params, const Budget& budget,
                           const SolveOptions& options = gadget_solve_options());

enum class Theorem1Mode { kExhaustive, kRepresentative };
enum class Theorem1Verdict { kBlocked, kRefuted, kInconclusive };

std::string_view to_string(Theorem1Mode m);
std::string_view to_string(Theorem1Verdict v);

struct PairOutcome {
  CopyPair pair;
  SolveOutcome outcome;
};

struct NonChoosabilityCertificate {
  FoldParams params;
  int list_size = 0;
  BigInt p;
  BigInt copies;
  Theorem1Mode mode = Theorem1Mode::kExhaustive;
  std::vector<PairOutcome> pairs;
  std::vector<RelabelRecord> relabeling;
  /// True when `relabeling` covers every pair (false: a sample was recorded).
  bool relabeling_complete = false;
  Theorem1Verdict verdict = Theorem1Verdict::kInconclusive;
  std::string note;
};

/// Exhaustive mode solves the extension problem for every (phi_u, phi_v)
/// pair and requires p^2 <= cap. Representative mode solves one pair and
/// records a checked relabeling onto it for every pair (or for the first
/// `cap` pairs when p^2 is larger).
NonChoosabilityCertificate verify_theorem1(const FoldParams& params, Theorem1Mode mode, const Budget& budget,
                                           std::uint64_t cap = kDefaultExplicitCap,
                                           const SolveOptions& options = gadget_solve_options());

}  // namespace listfold
