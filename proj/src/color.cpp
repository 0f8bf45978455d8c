#include "listfold/color.hpp"

#include <algorithm>
#include <charconv>

#include "listfold/json_io.hpp"

namespace listfold {

ColorUniverse ColorUniverse::build(std::vector<BlockSpec> blocks) {
  ColorUniverse u;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].name.empty()) throw ColorError("color block with empty name");
    if (blocks[i].name.find(':') != std::string::npos) {
      throw ColorError("color block name may not contain ':': " + blocks[i].name);
    }
    if (blocks[i].size < 0) throw ColorError("negative size for block " + blocks[i].name);
    for (std::size_t j = 0; j < i; ++j) {
      if (blocks[j].name == blocks[i].name) throw ColorError("duplicate color block " + blocks[i].name);
    }
  }
  u.blocks_ = std::move(blocks);
  for (const auto& b : u.blocks_) {
    u.offsets_.push_back(u.total_);
    u.total_ += b.size;
  }
  return u;
}

std::optional<int> ColorUniverse::find_block(std::string_view name) const {
  for (int b = 0; b < block_count(); ++b) {
    if (blocks_[b].name == name) return b;
  }
  return std::nullopt;
}

int ColorUniverse::block_of(ColorId c) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), c);
  int b = static_cast<int>(it - offsets_.begin()) - 1;
  // Skip empty blocks that share an offset with the owning block.
  while (b > 0 && blocks_[b].size == 0) --b;
  return b;
}

ColorId ColorUniverse::flat(Color c) const {
  if (c.block < 0 || c.block >= block_count() || c.index < 0 || c.index >= blocks_[c.block].size) {
    throw ColorError("color (" + std::to_string(c.block) + ", " + std::to_string(c.index) + ") outside universe");
  }
  return offsets_[c.block] + c.index;
}

Color ColorUniverse::color(ColorId c) const {
  if (c < 0 || c >= total_) throw ColorError("color id " + std::to_string(c) + " outside universe");
  int b = block_of(c);
  return {b, c - offsets_[b]};
}

std::vector<ColorId> ColorUniverse::block_colors(int b) const {
  std::vector<ColorId> out(blocks_[b].size);
  for (int i = 0; i < blocks_[b].size; ++i) out[i] = offsets_[b] + i;
  return out;
}

std::vector<ColorId> ColorUniverse::block_colors(std::string_view name) const {
  auto b = find_block(name);
  if (!b) throw ColorError("unknown color block " + std::string(name));
  return block_colors(*b);
}

std::string ColorUniverse::name(ColorId c) const {
  Color col = color(c);
  return blocks_[col.block].name + ":" + std::to_string(col.index);
}

ColorId ColorUniverse::parse(std::string_view text) const {
  auto colon = text.rfind(':');
  if (colon == std::string_view::npos) throw ColorError("color must be BLOCK:index, got " + std::string(text));
  auto b = find_block(text.substr(0, colon));
  if (!b) throw ColorError("unknown color block in " + std::string(text));
  int index = -1;
  auto digits = text.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ColorError("bad color index in " + std::string(text));
  }
  return flat({*b, index});
}

ColorSet make_color_set(std::vector<ColorId> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

ColorSet set_union(std::span<const ColorSet> parts) {
  std::vector<ColorId> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return make_color_set(std::move(all));
}

Rational epsilon_of(int m) {
  if (m < 1) throw ColorError("fold parameter m must be positive, got " + std::to_string(m));
  long long e = (m + 16) / 17 - 1;
  return Rational(e, m);
}

FoldParams FoldParams::of(int m) {
  FoldParams p;
  p.m = m;
  p.epsilon = epsilon_of(m);
  p.e_size = (m + 16) / 17 - 1;
  return p;
}

ListAssignment::ListAssignment(ColorUniverse universe, std::vector<ColorSet> lists)
    : universe_(std::move(universe)), lists_(std::move(lists)) {
  for (auto& l : lists_) {
    l = make_color_set(std::move(l));
    if (!l.empty() && (l.front() < 0 || l.back() >= universe_.size())) {
      throw ColorError("list contains a color outside the universe");
    }
  }
}

void ListAssignment::check_covers(const Graph& g) const {
  if (vertex_count() != g.order()) {
    throw ColorError("list assignment has " + std::to_string(vertex_count()) + " lists, graph has " +
                     std::to_string(g.order()) + " vertices");
  }
}

CheckResult verify_coloring(const Graph& g, const ListAssignment& lists, const MultiColoring& phi,
                            Coverage coverage) {
  auto reject = [](std::string why) { return CheckResult{false, std::move(why)}; };
  if (lists.vertex_count() != g.order()) return reject("list assignment does not cover the graph");
  if (static_cast<int>(phi.phi.size()) != g.order()) return reject("coloring does not cover the graph");
  if (phi.b < 1) return reject("fold b must be positive");

  const auto& u = lists.universe();
  for (Vertex v = 0; v < g.order(); ++v) {
    const ColorSet& s = phi.phi[v];
    if (coverage == Coverage::kPartial && s.empty()) continue;
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
      return reject("colors at " + g.label(v) + " are not a set");
    }
    if (static_cast<int>(s.size()) != phi.b) {
      return reject("vertex " + g.label(v) + " has " + std::to_string(s.size()) + " colors, expected " +
                    std::to_string(phi.b));
    }
    const ColorSet& l = lists.list(v);
    for (ColorId c : s) {
      if (!std::binary_search(l.begin(), l.end(), c)) {
        std::string cname = (c >= 0 && c < u.size()) ? u.name(c) : std::to_string(c);
        return reject("color " + cname + " at " + g.label(v) + " is not in its list");
      }
    }
  }
  for (const auto& [a, b] : g.edges()) {
    const ColorSet& sa = phi.phi[a];
    const ColorSet& sb = phi.phi[b];
    ColorSet common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    if (!common.empty()) {
      return reject("edge " + g.label(a) + "-" + g.label(b) + " shares color " + u.name(common.front()));
    }
  }
  return {true, {}};
}

ListAssignment relabel(const ListAssignment& lists, std::span<const ColorId> perm) {
  std::vector<ColorSet> out;
  out.reserve(lists.lists().size());
  for (const auto& l : lists.lists()) {
    ColorSet s;
    for (ColorId c : l) s.push_back(perm[c]);
    out.push_back(make_color_set(std::move(s)));
  }
  return ListAssignment(lists.universe(), std::move(out));
}

MultiColoring relabel(const MultiColoring& phi, std::span<const ColorId> perm) {
  MultiColoring out{phi.b, {}};
  for (const auto& s : phi.phi) {
    ColorSet t;
    for (ColorId c : s) t.push_back(perm[c]);
    out.phi.push_back(make_color_set(std::move(t)));
  }
  return out;
}

std::vector<ColorSet> gadget_lists(const GadgetBlocks& k) {
  auto join = [](std::initializer_list<const ColorSet*> parts) {
    std::vector<ColorSet> copy;
    for (const ColorSet* p : parts) copy.push_back(*p);
    return set_union(copy);
  };
  const ColorSet abce = join({&k.a, &k.b, &k.c, &k.e});
  const ColorSet ade = join({&k.a, &k.d, &k.e});
  const ColorSet bde = join({&k.b, &k.d, &k.e});
  const ColorSet cde = join({&k.c, &k.d, &k.e});
  //       u    v    x1    x2    x3    w     y1   y2   y3   y4   y5   z1   z2   z3   z4   z5
  return {k.a, k.b, abce, abce, abce, abce, ade, cde, ade, bde, cde, bde, cde, bde, cde, ade};
}

ListAssignment block_lists(const FoldParams& params, std::optional<int> e_override) {
  const int m = params.m;
  const int e = e_override.value_or(params.e_size);
  if (e < 0) throw ColorError("E block size must be non-negative");
  auto universe = ColorUniverse::build({{"A", m}, {"B", m}, {"C", m}, {"D", 2 * m}, {"E", e}});
  GadgetBlocks blocks{universe.block_colors(0), universe.block_colors(1), universe.block_colors(2),
                      universe.block_colors(3), universe.block_colors(4)};
  auto lists = gadget_lists(blocks);
  return ListAssignment(std::move(universe), std::move(lists));
}

std::string lists_to_json(const Graph& g, const ListAssignment& lists) {
  return json::lists(g, lists).dump() + "\n";
}

ListAssignment lists_from_json(const Graph& g, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ColorError(std::string("malformed list-assignment JSON: ") + e.what());
  }
  return json::lists_from(g, doc);
}

std::string coloring_to_json(const Graph& g, const ColorUniverse& universe, const MultiColoring& phi) {
  return json::coloring(g, universe, phi).dump() + "\n";
}

MultiColoring coloring_from_json(const Graph& g, const ColorUniverse& universe, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ColorError(std::string("malformed coloring JSON: ") + e.what());
  }
  return json::coloring_from(g, universe, doc);
}

}  // namespace listfold
