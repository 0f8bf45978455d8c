#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "listfold/graph.hpp"
#include "listfold/rational.hpp"

namespace listfold {

class ColorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat color index into a ColorUniverse, block-major.
using ColorId = int;

struct Color {
  int block = 0;
  int index = 0;
  auto operator<=>(const Color&) const = default;
};

struct BlockSpec {
  std::string name;
  int size = 0;
  bool operator==(const BlockSpec&) const = default;
};

/// Ordered list of disjoint named color blocks.
class ColorUniverse {
 public:
  ColorUniverse() = default;
  /// Throws ColorError on duplicate names, empty names or negative sizes.
  static ColorUniverse build(std::vector<BlockSpec> blocks);

  int size() const { return total_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const BlockSpec& block(int b) const { return blocks_[b]; }
  const std::vector<BlockSpec>& blocks() const { return blocks_; }
  std::optional<int> find_block(std::string_view name) const;
  int block_of(ColorId c) const;

  ColorId flat(Color c) const;
  Color color(ColorId c) const;
  /// All colors of one block, ascending.
  std::vector<ColorId> block_colors(int b) const;
  std::vector<ColorId> block_colors(std::string_view name) const;

  /// "BLOCK:index", e.g. "A:0".
  std::string name(ColorId c) const;
  ColorId parse(std::string_view text) const;

  bool operator==(const ColorUniverse& o) const { return blocks_ == o.blocks_; }

 private:
  std::vector<BlockSpec> blocks_;
  std::vector<int> offsets_;
  int total_ = 0;
};

/// Sorted, duplicate-free set of colors.
using ColorSet = std::vector<ColorId>;

ColorSet make_color_set(std::vector<ColorId> colors);
ColorSet set_union(std::span<const ColorSet> parts);

/// Fold parameters (m, eps) with eps*m = ceil(m/17) - 1 held exactly.
struct FoldParams {
  int m = 1;
  int e_size = 0;
  Rational epsilon{0};

  /// Throws ColorError for m < 1.
  static FoldParams of(int m);
};

/// (ceil(m/17) - 1) / m. Throws ColorError for m < 1.
Rational epsilon_of(int m);

class ListAssignment {
 public:
  ListAssignment() = default;
  /// Throws ColorError if any color lies outside the universe.
  ListAssignment(ColorUniverse universe, std::vector<ColorSet> lists);

  const ColorUniverse& universe() const { return universe_; }
  const ColorSet& list(Vertex v) const { return lists_[v]; }
  const std::vector<ColorSet>& lists() const { return lists_; }
  int vertex_count() const { return static_cast<int>(lists_.size()); }

  /// Throws ColorError unless there is exactly one list per vertex of g.
  void check_covers(const Graph& g) const;

  bool operator==(const ListAssignment&) const = default;

 private:
  ColorUniverse universe_;
  std::vector<ColorSet> lists_;
};

struct MultiColoring {
  int b = 1;
  /// One set per vertex. In a partial coloring, empty sets mark uncolored
  /// vertices.
  std::vector<ColorSet> phi;

  bool operator==(const MultiColoring&) const = default;
};

struct CheckResult {
  bool accepted = false;
  std::string reason;  // first violated constraint; empty on acceptance
  explicit operator bool() const { return accepted; }
};

enum class Coverage { kFull, kPartial };

/// Independent checker: |phi(v)| = b, phi(v) within L(v), adjacent sets
/// disjoint. With Coverage::kPartial vertices with empty sets are skipped.
CheckResult verify_coloring(const Graph& g, const ListAssignment& lists, const MultiColoring& phi,
                            Coverage coverage = Coverage::kFull);

/// Applies a bijection of the universe (perm[old] = new) to lists or a coloring.
ListAssignment relabel(const ListAssignment& lists, std::span<const ColorId> perm);
MultiColoring relabel(const MultiColoring& phi, std::span<const ColorId> perm);

// -- the gadget's list assignment -------------------------------------------

/// Canonical vertex order of the gadget; positions in this array are the
/// vertex ids of the shipped gadget data.
inline constexpr std::array<std::string_view, 16> kGadgetRoles = {
    "u", "v", "x1", "x2", "x3", "w", "y1", "y2", "y3", "y4", "y5", "z1", "z2", "z3", "z4", "z5"};

/// Color sets playing the roles of A..E in the gadget's list assignment.
struct GadgetBlocks {
  ColorSet a, b, c, d, e;
};

/// Lists indexed like kGadgetRoles:
///   u: A   v: B   x1,x2,x3,w: A+B+C+E   y1,y3,z5: A+D+E
///   y4,z1,z3: B+D+E   y2,y5,z2,z4: C+D+E
std::vector<ColorSet> gadget_lists(const GadgetBlocks& blocks);

/// Universe A,B,C (m each), D (2m), E (e) and the gadget lists over it.
/// `e_override` replaces params.e_size.
ListAssignment block_lists(const FoldParams& params, std::optional<int> e_override = std::nullopt);

// -- JSON ------------------------------------------------------------------

/// {"universe":[{"name","size"}...],"lists":{label:["A:0",...]}} keyed by
/// vertex label (role, or id when unnamed).
std::string lists_to_json(const Graph& g, const ListAssignment& lists);
ListAssignment lists_from_json(const Graph& g, std::string_view text);

/// {"b":b,"phi":{label:["A:0",...]}}
std::string coloring_to_json(const Graph& g, const ColorUniverse& universe, const MultiColoring& phi);
MultiColoring coloring_from_json(const Graph& g, const ColorUniverse& universe, std::string_view text);

}  // namespace listfold
