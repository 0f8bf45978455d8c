#include "listfold/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace listfold {

Graph Graph::build(std::vector<VertexSpec> vertices,
                   const std::vector<std::pair<std::int64_t, std::int64_t>>& edges) {
  std::sort(vertices.begin(), vertices.end(),
            [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].id == vertices[i - 1].id) {
      throw GraphError("duplicate vertex id " + std::to_string(vertices[i].id));
    }
  }

  Graph g;
  g.ids_.reserve(vertices.size());
  g.roles_.reserve(vertices.size());
  for (auto& v : vertices) {
    g.ids_.push_back(v.id);
    g.roles_.push_back(std::move(v.role));
  }
  for (std::size_t i = 0; i < g.roles_.size(); ++i) {
    if (g.roles_[i].empty()) continue;
    for (std::size_t j = i + 1; j < g.roles_.size(); ++j) {
      if (g.roles_[i] == g.roles_[j]) throw GraphError("duplicate role " + g.roles_[i]);
    }
  }
  g.adjacency_.assign(vertices.size(), {});

  auto describe = [](std::int64_t a, std::int64_t b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
  };
  for (const auto& [a, b] : edges) {
    auto pa = g.find_id(a);
    auto pb = g.find_id(b);
    if (!pa) throw GraphError("edge " + describe(a, b) + " has unknown endpoint " + std::to_string(a));
    if (!pb) throw GraphError("edge " + describe(a, b) + " has unknown endpoint " + std::to_string(b));
    if (*pa == *pb) throw GraphError("self-loop at vertex " + std::to_string(a));
    g.edges_.emplace_back(std::min(*pa, *pb), std::max(*pa, *pb));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError("duplicate edge " + describe(g.ids_[dup->first], g.ids_[dup->second]));
  }
  for (const auto& [a, b] : g.edges_) {
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> roles) {
  std::vector<VertexSpec> vs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    vs[i].id = i;
    if (static_cast<std::size_t>(i) < roles.size()) vs[i].role = std::move(roles[i]);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> es(edges.begin(), edges.end());
  return build(std::move(vs), es);
}

std::string Graph::label(Vertex v) const {
  return roles_[v].empty() ? std::to_string(ids_[v]) : roles_[v];
}

std::optional<Vertex> Graph::find_id(std::int64_t id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ids_.begin());
}

std::optional<Vertex> Graph::find_role(std::string_view role) const {
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (roles_[i] == role) return static_cast<Vertex>(i);
  }
  return std::nullopt;
}

Vertex Graph::at_role(std::string_view role) const {
  auto v = find_role(role);
  if (!v) throw GraphError("no vertex with role " + std::string(role));
  return *v;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

bool Graph::connected() const {
  if (order() == 0) return true;
  std::vector<char> seen(order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order();
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<char> in(order(), 0);
  for (Vertex v : keep) in[v] = 1;
  std::vector<VertexSpec> vs;
  for (Vertex v = 0; v < order(); ++v) {
    if (in[v]) vs.push_back({ids_[v], roles_[v]});
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> es;
  for (const auto& [a, b] : edges_) {
    if (in[a] && in[b]) es.emplace_back(ids_[a], ids_[b]);
  }
  return build(std::move(vs), es);
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    dist[root] = 0;
    parent[root] = -1;
    q.push(root);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (const auto& [a, b] : g.edges()) {
    for (Vertex c : g.neighbors(b)) {
      if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

  DegeneracyOrder result;
  result.order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    }
    result.degeneracy = std::max(result.degeneracy, deg[pick]);
    removed[pick] = 1;
    result.order.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (!removed[w]) --deg[w];
    }
  }
  return result;
}

int max_later_neighbors(const Graph& g, std::span<const Vertex> order) {
  std::vector<int> position(g.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  int worst = 0;
  for (Vertex v : order) {
    int later = 0;
    for (Vertex w : g.neighbors(v)) later += position[w] > position[v] ? 1 : 0;
    worst = std::max(worst, later);
  }
  return worst;
}

EmbeddingVerdict check_embedding(const Graph& g, const EmbeddingCertificate& cert) {
  EmbeddingVerdict verdict;
  const int n = g.order();
  if (static_cast<int>(cert.rotation.size()) != n) {
    verdict.reason = "rotation covers " + std::to_string(cert.rotation.size()) + " vertices, graph has " +
                     std::to_string(n);
    return verdict;
  }
  if (!g.connected()) {
    verdict.reason = "graph is not connected";
    return verdict;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = cert.rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), g.neighbors(v).begin(), g.neighbors(v).end())) {
      verdict.reason = "rotation at vertex " + g.label(v) + " does not list exactly its neighbours";
      return verdict;
    }
  }

  // Dart (a -> b) continues the face with (b -> successor of a around b).
  std::vector<std::vector<char>> used(n);
  for (Vertex v = 0; v < n; ++v) used[v].assign(cert.rotation[v].size(), 0);
  auto slot = [&](Vertex at, Vertex nbr) {
    const auto& rot = cert.rotation[at];
    return static_cast<int>(std::find(rot.begin(), rot.end(), nbr) - rot.begin());
  };

  int faces = 0;
  int darts_consumed = 0;
  for (Vertex start = 0; start < n; ++start) {
    for (std::size_t i = 0; i < cert.rotation[start].size(); ++i) {
      if (used[start][i]) continue;
      ++faces;
      Vertex a = start;
      int ai = static_cast<int>(i);
      while (!used[a][ai]) {
        used[a][ai] = 1;
        ++darts_consumed;
        Vertex b = cert.rotation[a][ai];
        const auto& rb = cert.rotation[b];
        int next = (slot(b, a) + 1) % static_cast<int>(rb.size());
        a = b;
        ai = next;
      }
      if (a != start || ai != static_cast<int>(i)) {
        verdict.reason = "face traversal from vertex " + g.label(start) + " does not close";
        return verdict;
      }
    }
  }
  if (g.size() == 0) faces = 1;
  verdict.faces = faces;
  verdict.euler_characteristic = n - g.size() + faces;

  if (darts_consumed != 2 * g.size()) {
    verdict.reason = "consumed " + std::to_string(darts_consumed) + " darts, expected " + std::to_string(2 * g.size());
    return verdict;
  }
  if (cert.declared_faces && *cert.declared_faces != faces) {
    verdict.reason = "declared " + std::to_string(*cert.declared_faces) + " faces, traversal found " +
                     std::to_string(faces);
    return verdict;
  }
  if (verdict.euler_characteristic != 2) {
    verdict.reason = "V - E + F = " + std::to_string(verdict.euler_characteristic) + ", not 2";
    return verdict;
  }
  verdict.accepted = true;
  return verdict;
}

std::string export_graph(const Graph& g, ExportFormat format) {
  if (format == ExportFormat::kJson) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (Vertex v = 0; v < g.order(); ++v) {
      nlohmann::ordered_json rec;
      rec["id"] = g.id(v);
      if (!g.role(v).empty()) rec["role"] = g.role(v);
      doc["vertices"].push_back(std::move(rec));
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges()) doc["edges"].push_back({g.id(a), g.id(b)});
    return doc.dump() + "\n";
  }

  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << g.id(v);
    if (!g.role(v).empty()) out << " [label=\"" << g.role(v) << "\"]";
    out << ";\n";
  }
  for (const auto& [a, b] : g.edges()) out << "  " << g.id(a) << " -- " << g.id(b) << ";\n";
  out << "}\n";
  return out.str();
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw GraphError("graph JSON needs \"vertices\" and \"edges\"");
  }
  try {
    std::vector<VertexSpec> vs;
    for (const auto& rec : doc.at("vertices")) {
      VertexSpec spec;
      spec.id = rec.at("id").get<std::int64_t>();
      if (rec.contains("role") && !rec["role"].is_null()) spec.role = rec["role"].get<std::string>();
      vs.push_back(std::move(spec));
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> es;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError("edge entries must be [a, b] pairs");
      es.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
    }
    return Graph::build(std::move(vs), es);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace listfold
