#include "sombor/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>

namespace sombor {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw OrderCapExceeded("graph order " + std::to_string(n) + " outside [0, 32]");
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw VertexOutOfRange("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has a vertex outside [0," + std::to_string(n) + ")");
    if (e.u == e.v) throw SelfLoop("loop at vertex " + std::to_string(e.u));
    if (g.rows_[e.u] >> e.v & 1u)
      throw DuplicateEdge("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    g.rows_[e.u] |= Row{1} << e.v;
    g.rows_[e.v] |= Row{1} << e.u;
    ++g.m_;
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const Row> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) != n) throw GraphError("row count does not match order");
  int twice = 0;
  for (int v = 0; v < n; ++v) {
    Row r = rows[v];
    if (n < 32 && (r >> n) != 0) throw VertexOutOfRange("row has bits beyond the order");
    if (r >> v & 1u) throw SelfLoop("loop at vertex " + std::to_string(v));
    g.rows_[v] = r;
    twice += std::popcount(r);
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if ((g.rows_[u] >> v & 1u) != (g.rows_[v] >> u & 1u)) throw GraphError("adjacency is not symmetric");
  g.m_ = twice / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw VertexOutOfRange("vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
}

Graph::Row Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return rows_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u] >> v & 1u;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return std::popcount(rows_[v]);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    Row higher = u + 1 < 32 ? rows_[u] >> (u + 1) << (u + 1) : 0;
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.push_back({u, v});
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = std::popcount(rows_[v]);
  return out;
}

Graph Graph::with_edge(Edge e) const {
  check_vertex(e.u);
  check_vertex(e.v);
  if (e.u == e.v) throw SelfLoop("loop at vertex " + std::to_string(e.u));
  if (adjacent(e.u, e.v))
    throw DuplicateEdge("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  Graph g = *this;
  g.rows_[e.u] |= Row{1} << e.v;
  g.rows_[e.v] |= Row{1} << e.u;
  ++g.m_;
  return g;
}

Graph Graph::without_edge(Edge e) const {
  if (!adjacent(e.u, e.v))
    throw GraphError("no edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  Graph g = *this;
  g.rows_[e.u] &= ~(Row{1} << e.v);
  g.rows_[e.v] &= ~(Row{1} << e.u);
  --g.m_;
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size does not match order");
  Row seen = 0;
  for (Vertex p : perm) {
    check_vertex(p);
    if (seen >> p & 1u) throw GraphError("relabeling is not a permutation");
    seen |= Row{1} << p;
  }
  Graph g(n_);
  g.m_ = m_;
  for (int u = 0; u < n_; ++u) {
    Row r = rows_[u], mapped = 0;
    while (r) {
      int v = std::countr_zero(r);
      r &= r - 1;
      mapped |= Row{1} << perm[v];
    }
    g.rows_[perm[u]] = mapped;
  }
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  Row all = n_ == 32 ? ~Row{0} : (Row{1} << n_) - 1;
  for (int v = 0; v < n_; ++v) g.rows_[v] = all & ~rows_[v] & ~(Row{1} << v);
  g.m_ = n_ * (n_ - 1) / 2 - m_;
  return g;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int component_count(const Graph& g) {
  const int n = g.order();
  Graph::Row unseen = n == 32 ? ~Graph::Row{0} : (Graph::Row{1} << n) - 1;
  int components = 0;
  while (unseen) {
    ++components;
    Graph::Row frontier = unseen & -unseen;
    unseen &= ~frontier;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Graph::Row next = g.neighbors(v) & unseen;
      unseen &= ~next;
      frontier |= next;
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

bool is_unicyclic(const Graph& g) { return is_connected(g) && g.size() == g.order(); }

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> queue;
    dist[root] = 0;
    parent[root] = -1;
    queue.push(root);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      Graph::Row r = g.neighbors(x);
      while (r) {
        int y = std::countr_zero(r);
        r &= r - 1;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<Edge> bridges(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("bridges() requires a connected graph");
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int clock = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = clock++;
    Graph::Row r = g.neighbors(v);
    while (r) {
      int w = std::countr_zero(r);
      r &= r - 1;
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.push_back(Edge{v, w}.normalized());
      }
    }
  };
  if (n > 0) dfs(0, -1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> pendent_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<PendentPath> pendent_paths(const Graph& g) {
  std::vector<PendentPath> out;
  for (Vertex leaf : pendent_vertices(g)) {
    std::vector<Vertex> chain{leaf};
    Vertex prev = leaf;
    Vertex cur = std::countr_zero(g.neighbors(leaf));
    while (g.degree(cur) == 2) {
      chain.push_back(cur);
      Graph::Row next = g.neighbors(cur) & ~(Graph::Row{1} << prev);
      prev = cur;
      cur = std::countr_zero(next);
    }
    if (g.degree(cur) < 3) continue;  // the whole component is a path
    std::reverse(chain.begin(), chain.end());
    out.push_back({cur, std::move(chain)});
  }
  std::sort(out.begin(), out.end(), [](const PendentPath& a, const PendentPath& b) {
    return std::pair(a.origin, a.vertices.front()) < std::pair(b.origin, b.vertices.front());
  });
  return out;
}

bool is_pendent_path(const Graph& g, const PendentPath& p) {
  const int n = g.order();
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };
  if (!in_range(p.origin) || p.vertices.empty()) return false;
  for (Vertex v : p.vertices)
    if (!in_range(v)) return false;
  if (g.degree(p.origin) < 3) return false;
  Vertex prev = p.origin;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (!g.adjacent(prev, v)) return false;
    int want = i + 1 == p.vertices.size() ? 1 : 2;
    if (g.degree(v) != want) return false;
    prev = v;
  }
  return true;
}

Graph transform_path_shift(const Graph& g, const PendentPath& p, const PendentPath& q) {
  if (!is_pendent_path(g, p)) throw InvalidPendentPath("P is not a pendent path of the graph");
  if (!is_pendent_path(g, q)) throw InvalidPendentPath("Q is not a pendent path of the graph");
  if (p == q) throw InvalidSurgery("P and Q must be distinct pendent paths");
  Vertex u = p.origin;
  Vertex x = p.vertices.front();
  Vertex y = q.tip();
  if (x == y) throw InvalidSurgery("x and y coincide");
  return g.without_edge({u, x}).with_edge({x, y});
}

Graph transform_contract_pendant(const Graph& g, Edge e) {
  const auto [u, v] = e;
  if (!g.adjacent(u, v))
    throw InvalidSurgery("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  if (g.degree(u) < 2 || g.degree(v) < 2) throw InvalidSurgery("edge is pendent");
  auto cut = bridges(g);
  if (!std::binary_search(cut.begin(), cut.end(), e.normalized()))
    throw InvalidSurgery("edge is not a cut edge");
  Graph out = g;
  Graph::Row moved = g.neighbors(v) & ~(Graph::Row{1} << u);
  while (moved) {
    int w = std::countr_zero(moved);
    moved &= moved - 1;
    out = out.without_edge({v, w}).with_edge({u, w});
  }
  return out;
}

}  // namespace sombor
