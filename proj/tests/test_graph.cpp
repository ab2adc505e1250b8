#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sombor/families.hpp"
#include "sombor/graph.hpp"
#include "sombor/sombor.hpp"

using namespace sombor;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edge_list(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::from_edge_list(leaves + 1, e);
}

Graph paw() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph::from_edge_list(n, e);
}

// Reference connectivity by DFS over explicit edge lists.
bool connected_reference(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < g.order(); ++u)
      if (g.adjacent(u, v) && !seen[u]) seen[u] = true, stack.push_back(u);
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

TEST_CASE("from_edge_list builds the basic graphs") {
  Graph c3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3 == cycle(3));
  CHECK(c3.size() == 3);
  Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(k2.size() == 1);
  CHECK(k2.adjacent(1, 0));
  Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4 == path(4));
  CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("from_edge_list reports each malformed input distinctly") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), VertexOutOfRange);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 0}}), VertexOutOfRange);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), SelfLoop);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {1, 0}}), DuplicateEdge);
  CHECK_THROWS_AS(Graph(33), OrderCapExceeded);
  CHECK_NOTHROW(Graph(32));
}

TEST_CASE("edits return copies") {
  Graph p4 = path(4);
  Graph c4 = p4.with_edge({3, 0});
  CHECK(c4 == cycle(4));
  CHECK(p4.size() == 3);
  CHECK(c4.without_edge({0, 3}) == p4);
  CHECK_THROWS_AS(p4.with_edge({0, 1}), DuplicateEdge);
  CHECK_THROWS_AS(p4.without_edge({0, 2}), GraphError);
  CHECK(complete(4).complement().size() == 0);
}

TEST_CASE("degree") {
  for (int v = 0; v < 5; ++v) CHECK(degree(cycle(5), v) == 2);
  for (int v = 0; v < 4; ++v) CHECK(degree(complete(4), v) == 3);
  CHECK(degree(star(3), 0) == 3);
  CHECK_THROWS_AS(degree(star(3), 4), VertexOutOfRange);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path(4)));
  CHECK_FALSE(is_connected(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph(1)));
  CHECK(component_count(Graph::from_edge_list(4, {{0, 1}, {2, 3}})) == 2);
}

TEST_CASE("girth") {
  CHECK(girth(cycle(7)) == 7);
  CHECK(girth(complete(4)) == 3);
  CHECK_FALSE(girth(path(6)).has_value());
  CHECK_FALSE(girth(star(5)).has_value());
  CHECK(girth(lollipop(9, 5)) == 5);
}

TEST_CASE("bridges") {
  CHECK(bridges(path(4)) == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(bridges(cycle(5)).empty());
  // C_{5,1}: removing the pendant edge is the only disconnecting removal
  Graph g = cycle_with_pendant(5);
  std::vector<Edge> expected;
  for (const Edge& e : g.edges())
    if (!is_connected(g.without_edge(e))) expected.push_back(e);
  CHECK(expected.size() == 1);
  CHECK(bridges(g) == expected);
  CHECK(bridges(g) == std::vector<Edge>{{0, 4}});
  CHECK_THROWS_AS(bridges(Graph::from_edge_list(4, {{0, 1}, {2, 3}})), DisconnectedGraph);
}

TEST_CASE("pendent vertices") {
  CHECK(pendent_vertices(path(2)) == std::vector<Vertex>{0, 1});
  CHECK(pendent_vertices(cycle(6)).empty());
  CHECK(pendent_vertices(star(4)) == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("is_unicyclic and max_degree") {
  CHECK(is_unicyclic(cycle(5)));
  CHECK_FALSE(is_unicyclic(path(5)));
  Graph u63 = u_n_g(6, 3);
  CHECK(u63.size() == u63.order());
  CHECK(is_unicyclic(u63));
  CHECK(max_degree(cycle(9)) == 2);
  CHECK(max_degree(complete(5)) == 4);
  CHECK(max_degree(u_n_g(8, 4)) == 2 + (8 - 4));
  CHECK(is_tree(path(5)));
  CHECK_FALSE(is_tree(cycle(5)));
}

TEST_CASE("pendent paths") {
  Graph t = star_like_tree({7, 3, 0, {2, 2, 2}});
  auto paths = pendent_paths(t);
  REQUIRE(paths.size() == 3);
  for (const auto& p : paths) {
    CHECK(p.origin == 0);
    CHECK(p.length() == 2);
    CHECK(is_pendent_path(t, p));
  }
  CHECK(pendent_paths(cycle(6)).empty());
  auto lp = pendent_paths(lollipop(7, 4));
  REQUIRE(lp.size() == 1);
  CHECK(lp[0].length() == 3);
  CHECK(lp[0].origin == 0);
  CHECK(pendent_paths(path(5)).empty());
}

TEST_CASE("pendent path shift") {
  // K_{1,3} with one edge subdivided twice: branches of length 1, 1 and 3
  Graph g = star_like_tree({6, 3, 2, {3}});
  auto paths = pendent_paths(g);
  REQUIRE(paths.size() == 3);
  const PendentPath& shortp = paths[0];
  const PendentPath& longp = paths[2];
  CHECK(shortp.length() == 1);
  CHECK(longp.length() == 3);
  Graph h = transform_path_shift(g, shortp, longp);
  CHECK(is_tree(h));
  CHECK(max_degree(h) == 2);  // the hub lost a branch: h is a path
  CHECK(compare(sombor_exact(h), sombor_exact(g)) == std::strong_ordering::less);
  CHECK(sombor_index(h) < sombor_index(g));

  // star-like (8, 3) with branches 1, 2, 4: hub loses a branch
  Graph s = star_like_tree({8, 3, 1, {4, 2}});
  auto sp = pendent_paths(s);
  REQUIRE(sp.size() == 3);
  Graph shifted = transform_path_shift(s, sp[0], sp[1]);
  CHECK(degree(shifted, 0) == 2);
  CHECK(pendent_paths(shifted).empty());  // a bare path remains
  CHECK(is_tree(shifted));
  CHECK(compare(sombor_exact(shifted), sombor_exact(s)) == std::strong_ordering::less);

  PendentPath bad{1, {2}};
  CHECK_THROWS_AS(transform_path_shift(path(3), bad, bad), InvalidPendentPath);
  CHECK_THROWS_AS(transform_path_shift(g, shortp, shortp), InvalidSurgery);
}

TEST_CASE("cut-edge contraction") {
  // two triangles joined by the bridge 2-3
  Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  Graph h = transform_contract_pendant(g, {2, 3});
  CHECK(degree(h, 2) == 5);
  CHECK(degree(h, 3) == 1);
  auto d = h.degrees();
  std::sort(d.rbegin(), d.rend());
  CHECK(d == std::vector<int>{5, 2, 2, 2, 2, 1});
  CHECK(compare(sombor_exact(h), sombor_exact(g)) == std::strong_ordering::greater);

  Graph k13 = transform_contract_pendant(path(4), {1, 2});
  CHECK(degree(k13, 1) == 3);
  CHECK(sombor_exact(k13) == RadicalSum::sqrt_of(10, 3));

  CHECK_THROWS_AS(transform_contract_pendant(cycle_with_pendant(5), {0, 4}), InvalidSurgery);
  CHECK_THROWS_AS(transform_contract_pendant(cycle(5), {0, 1}), InvalidSurgery);
}

TEST_CASE("canonical code") {
  Graph c4a = cycle(4);
  Graph c4b = Graph::from_edge_list(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(canonical_code(c4a) == canonical_code(c4b));
  CHECK(canonical_code(path(4)) != canonical_code(star(3)));

  std::vector<Vertex> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::string> codes;
  do codes.insert(canonical_code(paw().relabeled(perm)));
  while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(codes.size() == 1);

  CHECK_THROWS_AS(canonical_code(path(11)), OrderCapExceeded);
}

TEST_CASE("canonical code is invariant under every relabeling, n <= 6") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      Graph g = random_graph(n, 0.5, rng);
      const std::string code = canonical_code(g);
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do CHECK(canonical_code(g.relabeled(perm)) == code);
      while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("canonical code separates non-isomorphic graphs with equal degree sequences") {
  // C_6 versus two disjoint triangles
  Graph two_triangles = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(canonical_code(cycle(6)) != canonical_code(two_triangles));
  CHECK(certificate(cycle(6)) != certificate(two_triangles));
}

TEST_CASE("are_isomorphic") {
  std::vector<Vertex> perm{3, 0, 4, 1, 2};
  CHECK(are_isomorphic(cycle(5), cycle(5).relabeled(perm)));
  CHECK_FALSE(are_isomorphic(cycle(4), path(4)));
  // U_{7,3} by two construction orders
  Graph a = u_n_g(7, 3);
  Graph b = Graph::from_edge_list(7, {{6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 5}, {5, 4}, {4, 6}});
  CHECK(are_isomorphic(a, b));
}

TEST_CASE("certificate agrees with canonical code on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 8;
    Graph a = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
    Graph b = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(certificate(a) == certificate(a.relabeled(perm)));
    CHECK((certificate(a) == certificate(b)) == (canonical_code(a) == canonical_code(b)));
    Graph c = canonical_form(a);
    CHECK(canonical_code(c) == canonical_code(a));
  }
}

TEST_CASE("bridges match connectivity after each edge deletion") {
  std::mt19937 rng(3);
  int tested = 0;
  while (tested < 200) {
    Graph g = random_graph(3 + tested % 9, 0.35, rng);
    if (!is_connected(g)) continue;
    ++tested;
    CHECK(is_connected(g) == connected_reference(g));
    auto br = bridges(g);
    for (const Edge& e : g.edges()) {
      const bool is_bridge = std::find(br.begin(), br.end(), e) != br.end();
      CHECK(is_bridge == !connected_reference(g.without_edge(e)));
    }
  }
}

TEST_CASE("girth absent exactly for forests") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(2 + trial % 10, 0.15 + 0.05 * (trial % 4), rng);
    CHECK(!girth(g).has_value() == (g.size() == g.order() - component_count(g)));
  }
}
