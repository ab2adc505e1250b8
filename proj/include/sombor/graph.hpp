#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sombor {

using Vertex = int;

/// Undirected edge, stored with u < v once normalized.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class VertexOutOfRange : public GraphError {
 public:
  using GraphError::GraphError;
};
class SelfLoop : public GraphError {
 public:
  using GraphError::GraphError;
};
class DuplicateEdge : public GraphError {
 public:
  using GraphError::GraphError;
};
class DisconnectedGraph : public GraphError {
 public:
  using GraphError::GraphError;
};
class InvalidPendentPath : public GraphError {
 public:
  using GraphError::GraphError;
};
class InvalidSurgery : public GraphError {
 public:
  using GraphError::GraphError;
};
class OrderCapExceeded : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Simple undirected graph on vertices 0..n-1, n <= 32, held as one
/// adjacency bitset per vertex. Values are immutable; edits return copies.
class Graph {
 public:
  static constexpr int kMaxOrder = 32;
  using Row = std::uint32_t;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// rows[v] bit u set iff uv is an edge; must be symmetric with an empty
  /// diagonal.
  static Graph from_rows(int n, std::span<const Row> rows);

  int order() const { return n_; }
  int size() const { return m_; }

  Row neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;

  /// Edges in lexicographic (u < v) order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;
  /// Graph on the same vertex count whose vertex perm[v] is v's image.
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<Row, kMaxOrder> rows_{};
};

/// A path origin-u_1-...-u_k with degree(origin) >= 3, degree(u_i) = 2 for
/// i < k and degree(u_k) = 1. `vertices` holds u_1..u_k.
struct PendentPath {
  Vertex origin = 0;
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  Vertex tip() const { return vertices.back(); }
  friend bool operator==(const PendentPath&, const PendentPath&) = default;
};

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }
int max_degree(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_unicyclic(const Graph& g);

/// Length of a shortest cycle; empty for forests.
std::optional<int> girth(const Graph& g);

/// Cut edges of a connected graph, normalized and sorted. Throws
/// DisconnectedGraph otherwise.
std::vector<Edge> bridges(const Graph& g);

std::vector<Vertex> pendent_vertices(const Graph& g);

/// Every maximal pendent path, ordered by (origin, first vertex). Bare paths
/// and cycles have none.
std::vector<PendentPath> pendent_paths(const Graph& g);

bool is_pendent_path(const Graph& g, const PendentPath& p);

/// G - ux + xy, where u is P's origin, x its first vertex, and y the tip of Q.
/// P and Q may share their origin but must be distinct paths.
Graph transform_path_shift(const Graph& g, const PendentPath& p, const PendentPath& q);

/// Contracts the non-pendent cut edge e = (u, v) onto u and re-attaches v as
/// a pendant of u. Orientation matters: e.u keeps the merged neighborhood.
Graph transform_contract_pendant(const Graph& g, Edge e);

/// Canonical byte string: the lexicographically smallest upper-triangle
/// adjacency string (graph6 column order) over all n! relabelings, prefixed
/// by n. Order is capped at kCanonicalCodeCap.
inline constexpr int kCanonicalCodeCap = 10;
std::string canonical_code(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Isomorphism certificate for any order up to Graph::kMaxOrder. Search is
/// restricted to orderings compatible with colour refinement, so this is much
/// faster than canonical_code but yields a different (still complete)
/// invariant. Used for deduplication during enumeration.
struct Certificate {
  std::string code;
  /// canonical_position[v] = position of v in the canonical ordering.
  std::vector<Vertex> canonical_position;
};
Certificate certify(const Graph& g);
inline std::string certificate(const Graph& g) { return certify(g).code; }
/// The graph relabeled into its certificate ordering.
Graph canonical_form(const Graph& g);

}  // namespace sombor
