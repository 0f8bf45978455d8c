#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace listfold {

/// Position of a vertex inside a Graph (0..order()-1). External ids are
/// kept separately so that algorithms can index plain vectors.
using Vertex = std::int32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VertexSpec {
  std::int64_t id = 0;
  std::string role;  // empty when unnamed
};

/// Immutable simple undirected graph.
///
/// Vertices are stored sorted by external id; every algorithm in this
/// library works on positions (Vertex), never on external ids.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds a graph. Throws GraphError naming the offending
  /// vertex or edge on self-loops, duplicate edges, duplicate ids and
  /// unknown endpoints.
  static Graph build(std::vector<VertexSpec> vertices,
                     const std::vector<std::pair<std::int64_t, std::int64_t>>& edges);

  /// Convenience: vertices 0..n-1, roles optional (may be shorter than n).
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> roles = {});

  int order() const { return static_cast<int>(ids_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  std::int64_t id(Vertex v) const { return ids_[v]; }
  const std::string& role(Vertex v) const { return roles_[v]; }
  /// Role when present, otherwise the decimal id.
  std::string label(Vertex v) const;

  std::optional<Vertex> find_id(std::int64_t id) const;
  std::optional<Vertex> find_role(std::string_view role) const;
  /// Like find_role but throws GraphError when absent.
  Vertex at_role(std::string_view role) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Edges as (lower position, higher position), sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  bool connected() const;

  /// Subgraph induced by `keep` (positions), preserving ids and roles.
  Graph induced(std::span<const Vertex> keep) const;

  /// Equality on (ids, roles, edge set).
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.roles_ == b.roles_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::int64_t> ids_;
  std::vector<std::string> roles_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

/// Every triangle as a sorted vertex triple, by explicit enumeration.
std::vector<std::array<Vertex, 3>> triangles(const Graph& g);

struct DegeneracyOrder {
  int degeneracy = 0;
  /// Each vertex has at most `degeneracy` neighbours later in this order.
  std::vector<Vertex> order;
};

/// Greedy minimum-degree peeling (ties broken by smallest position).
DegeneracyOrder degeneracy_order(const Graph& g);

/// Number of neighbours that appear later in `order`, maximised over vertices.
int max_later_neighbors(const Graph& g, std::span<const Vertex> order);

/// Cyclic order of neighbours around each vertex, plus the face count the
/// certificate claims (unchecked when absent).
struct EmbeddingCertificate {
  std::vector<std::vector<Vertex>> rotation;
  std::optional<int> declared_faces;
};

struct EmbeddingVerdict {
  bool accepted = false;
  int faces = 0;
  int euler_characteristic = 0;  // V - E + F
  std::string reason;            // empty on acceptance
};

/// Traverses the faces of the rotation system. Accepts iff the rotation is
/// consistent with adjacency, every dart lies on exactly one face, the face
/// count matches the declaration and V - E + F = 2.
EmbeddingVerdict check_embedding(const Graph& g, const EmbeddingCertificate& cert);

enum class ExportFormat { kJson, kDot };

/// Deterministic text export; JSON output round-trips through graph_from_json.
std::string export_graph(const Graph& g, ExportFormat format);
Graph graph_from_json(std::string_view text);

}  // namespace listfold
