#include "listfold/json_io.hpp"

namespace listfold::json {

Json graph(const Graph& g) { return Json::parse(export_graph(g, ExportFormat::kJson)); }

Json universe(const ColorUniverse& u) {
  Json out = Json::array();
  for (const auto& b : u.blocks()) out.push_back({{"name", b.name}, {"size", b.size}});
  return out;
}

ColorUniverse universe_from(const nlohmann::json& doc) {
  std::vector<BlockSpec> blocks;
  try {
    for (const auto& b : doc) blocks.push_back({b.at("name").get<std::string>(), b.at("size").get<int>()});
  } catch (const nlohmann::json::exception& e) {
    throw ColorError(std::string("malformed universe: ") + e.what());
  }
  return ColorUniverse::build(std::move(blocks));
}

Json color_set(const ColorUniverse& u, const ColorSet& s) {
  Json out = Json::array();
  for (ColorId c : s) out.push_back(u.name(c));
  return out;
}

ColorSet color_set_from(const ColorUniverse& u, const nlohmann::json& doc) {
  if (!doc.is_array()) throw ColorError("color set must be an array of \"BLOCK:index\" strings");
  std::vector<ColorId> out;
  for (const auto& c : doc) {
    if (!c.is_string()) throw ColorError("color must be a \"BLOCK:index\" string");
    out.push_back(u.parse(c.get<std::string>()));
  }
  return make_color_set(std::move(out));
}

namespace {

Vertex vertex_for_label(const Graph& g, const std::string& label) {
  if (auto v = g.find_role(label)) return *v;
  try {
    std::size_t used = 0;
    long long id = std::stoll(label, &used);
    if (used == label.size()) {
      if (auto v = g.find_id(id)) return *v;
    }
  } catch (const std::exception&) {
  }
  throw ColorError("unknown vertex " + label);
}

}  // namespace

Json lists(const Graph& g, const ListAssignment& l) {
  Json out;
  out["universe"] = universe(l.universe());
  Json per_vertex = Json::object();
  for (Vertex v = 0; v < g.order(); ++v) per_vertex[g.label(v)] = color_set(l.universe(), l.list(v));
  out["lists"] = std::move(per_vertex);
  return out;
}

ListAssignment lists_from(const Graph& g, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("universe") || !doc.contains("lists")) {
    throw ColorError("list assignment needs \"universe\" and \"lists\"");
  }
  ColorUniverse u = universe_from(doc["universe"]);
  std::vector<ColorSet> out(g.order());
  std::vector<char> seen(g.order(), 0);
  for (const auto& [label, colors] : doc["lists"].items()) {
    Vertex v = vertex_for_label(g, label);
    out[v] = color_set_from(u, colors);
    seen[v] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!seen[v]) throw ColorError("no list for vertex " + g.label(v));
  }
  return ListAssignment(std::move(u), std::move(out));
}

Json coloring(const Graph& g, const ColorUniverse& u, const MultiColoring& phi) {
  Json out;
  out["b"] = phi.b;
  Json per_vertex = Json::object();
  for (Vertex v = 0; v < g.order() && v < static_cast<Vertex>(phi.phi.size()); ++v) {
    if (!phi.phi[v].empty()) per_vertex[g.label(v)] = color_set(u, phi.phi[v]);
  }
  out["phi"] = std::move(per_vertex);
  return out;
}

MultiColoring coloring_from(const Graph& g, const ColorUniverse& u, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("b") || !doc.contains("phi")) {
    throw ColorError("coloring needs \"b\" and \"phi\"");
  }
  MultiColoring phi;
  phi.b = doc["b"].get<int>();
  phi.phi.assign(g.order(), {});
  for (const auto& [label, colors] : doc["phi"].items()) phi.phi[vertex_for_label(g, label)] = color_set_from(u, colors);
  return phi;
}

}  // namespace listfold::json
