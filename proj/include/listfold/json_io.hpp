#pragma once

// nlohmann::json views of the core value types, shared by certificates,
// the CLI and the Python bindings.

#include <json.hpp>

#include "listfold/color.hpp"
#include "listfold/graph.hpp"

namespace listfold::json {

using Json = nlohmann::ordered_json;

Json graph(const Graph& g);
Json universe(const ColorUniverse& u);
ColorUniverse universe_from(const nlohmann::json& doc);
Json color_set(const ColorUniverse& u, const ColorSet& s);
ColorSet color_set_from(const ColorUniverse& u, const nlohmann::json& doc);
Json lists(const Graph& g, const ListAssignment& l);
ListAssignment lists_from(const Graph& g, const nlohmann::json& doc);
Json coloring(const Graph& g, const ColorUniverse& u, const MultiColoring& phi);
MultiColoring coloring_from(const Graph& g, const ColorUniverse& u, const nlohmann::json& doc);

}  // namespace listfold::json
