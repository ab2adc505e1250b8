#include "sombor/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "sombor/sombor.hpp"

namespace sombor {
namespace {

std::string params(int n, int x) { return "(" + std::to_string(n) + ", " + std::to_string(x) + ")"; }

RadicalSum root(std::int64_t radicand, Rational coeff = 1) {
  return RadicalSum::sqrt_of(static_cast<std::uint64_t>(radicand), coeff);
}

void check_delta_params(int n, int delta) {
  if (delta < 3) throw FamilyError("maximum degree must be >= 3, got " + std::to_string(delta));
  if (n < delta + 1) throw FamilyError("order must be >= delta + 1, got " + params(n, delta));
  if (n > Graph::kMaxOrder) throw FamilyError("order exceeds 32");
}

void check_unicyclic_params(int n, int g) {
  if (g < 3 || g > n) throw FamilyError("need 3 <= g <= n, got " + params(n, g));
  if (n > Graph::kMaxOrder) throw FamilyError("order exceeds 32");
}

void check_pendent_params(int n, int k) {
  if (k < 1 || k > n - 3) throw FamilyError("need 1 <= k <= n - 3, got " + params(n, k));
  if (n > Graph::kMaxOrder) throw FamilyError("order exceeds 32");
}

}  // namespace

bool star_like_feasible(int n, int delta, int k) {
  if (delta < 3 || n < delta + 1 || n > Graph::kMaxOrder) return false;
  if (k < 0 || k > delta) return false;
  if (k == delta) return n - 1 == delta;
  return n - 1 - k >= 2 * (delta - k);
}

void validate(const StarLikeSpec& spec) {
  const int n = spec.n, delta = spec.delta, k = spec.pendant_count;
  if (delta < 3) throw FamilyError("star-like tree needs hub degree >= 3, got " + std::to_string(delta));
  if (n > Graph::kMaxOrder) throw FamilyError("order exceeds 32");
  if (k < 0 || k > delta) throw FamilyError("pendant count must lie in [0, delta], got " + std::to_string(k));
  if (k < 2 * delta - n + 1)
    throw FamilyError("pendant count " + std::to_string(k) + " is below 2*delta - n + 1 = " +
                      std::to_string(2 * delta - n + 1));
  if (static_cast<int>(spec.branch_lengths.size()) != delta - k)
    throw FamilyError("expected " + std::to_string(delta - k) + " branch lengths, got " +
                      std::to_string(spec.branch_lengths.size()));
  for (int len : spec.branch_lengths)
    if (len < 2) throw FamilyError("branch lengths must be >= 2, got " + std::to_string(len));
  int total = std::accumulate(spec.branch_lengths.begin(), spec.branch_lengths.end(), k);
  if (total != n - 1)
    throw FamilyError("pendant count plus branch lengths must equal n - 1 = " + std::to_string(n - 1) +
                      ", got " + std::to_string(total));
}

std::vector<std::vector<int>> star_like_partitions(int n, int delta, int k) {
  std::vector<std::vector<int>> out;
  if (!star_like_feasible(n, delta, k)) return out;
  const int parts = delta - k;
  std::vector<int> current;
  std::function<void(int, int, int)> rec = [&](int remaining, int slots, int cap) {
    if (slots == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int len = std::min(cap, remaining - 2 * (slots - 1)); len >= 2; --len) {
      current.push_back(len);
      rec(remaining - len, slots - 1, len);
      current.pop_back();
    }
  };
  rec(n - 1 - k, parts, n);
  return out;
}

Graph path(int n) {
  if (n < 1) throw FamilyError("path needs n >= 1, got " + std::to_string(n));
  if (n > Graph::kMaxOrder) throw FamilyError("order exceeds 32");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edge_list(n, edges);
}

std::vector<Edge> cycle_edges(int n) {
  if (n < 3) throw FamilyError("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return edges;
}

std::vector<Edge> cycle_with_pendant_edges(int n) {
  if (n < 4) throw FamilyError("cycle_with_pendant needs n >= 4, got " + std::to_string(n));
  std::vector<Edge> edges = cycle_edges(n - 1);
  edges.push_back({0, n - 1});
  return edges;
}

Graph cycle(int n) {
  auto edges = cycle_edges(n);
  if (n > Graph::kMaxOrder) throw FamilyError("order exceeds 32");
  return Graph::from_edge_list(n, edges);
}

Graph star_like_tree(const StarLikeSpec& spec) {
  validate(spec);
  std::vector<Edge> edges;
  int next = 1;
  for (int i = 0; i < spec.pendant_count; ++i) edges.push_back({0, next++});
  for (int len : spec.branch_lengths) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Graph::from_edge_list(spec.n, edges);
}

Graph lollipop(int n, int g) {
  if (g < 3) throw FamilyError("lollipop needs girth >= 3, got " + params(n, g));
  if (g > n - 2) throw FamilyError("lollipop needs a pendent path of length >= 2 (g <= n - 2), got " + params(n, g));
  if (n > Graph::kMaxOrder) throw FamilyError("order exceeds 32");
  std::vector<Edge> edges;
  for (int i = 0; i < g; ++i) edges.push_back({i, (i + 1) % g});
  edges.push_back({0, g});
  for (int v = g; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edge_list(n, edges);
}

Graph cycle_with_pendant(int n) {
  auto edges = cycle_with_pendant_edges(n);
  if (n > Graph::kMaxOrder) throw FamilyError("order exceeds 32");
  return Graph::from_edge_list(n, edges);
}

Graph u_n_g(int n, int g) {
  check_unicyclic_params(n, g);
  std::vector<Edge> edges;
  for (int i = 0; i < g; ++i) edges.push_back({i, (i + 1) % g});
  for (int v = g; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edge_list(n, edges);
}

Graph kite_with_pendants(int n, int k) {
  check_pendent_params(n, k);
  const int clique = n - k;
  std::vector<Edge> edges;
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) edges.push_back({u, v});
  for (int v = clique; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edge_list(n, edges);
}

bool is_star_like_tree(const Graph& g) {
  if (!is_tree(g)) return false;
  int big = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) ++big;
  return big == 1;
}

double path_so(int n) {
  if (n < 1) throw FamilyError("path needs n >= 1");
  if (n == 1) return 0.0;
  if (n == 2) return std::sqrt(2.0);
  return 2.0 * std::sqrt(5.0) + 2.0 * std::sqrt(2.0) * (n - 3);
}

RadicalSum path_so_exact(int n) {
  if (n < 1) throw FamilyError("path needs n >= 1");
  if (n == 1) return {};
  if (n == 2) return root(2);
  return root(5, 2) + root(2, 2 * (n - 3));
}

double cycle_so(int n) {
  if (n < 3) throw FamilyError("cycle needs n >= 3");
  return 2.0 * n * std::sqrt(2.0);
}

RadicalSum cycle_so_exact(int n) {
  if (n < 3) throw FamilyError("cycle needs n >= 3");
  return root(2, 2 * n);
}

double star_like_so(int n, int delta, int k) {
  if (!star_like_feasible(n, delta, k))
    throw FamilyError("no star-like tree with (n, delta, k) = (" + std::to_string(n) + ", " +
                      std::to_string(delta) + ", " + std::to_string(k) + ")");
  const double d = delta;
  return k * (theta(2.0) - theta(d)) + d * (std::sqrt(d * d + 4.0) + std::sqrt(5.0)) +
         2.0 * (n - 1 - 2 * delta) * std::sqrt(2.0);
}

RadicalSum star_like_so_exact(int n, int delta, int k) {
  if (!star_like_feasible(n, delta, k))
    throw FamilyError("no star-like tree with (n, delta, k) = (" + std::to_string(n) + ", " +
                      std::to_string(delta) + ", " + std::to_string(k) + ")");
  const std::int64_t d2 = static_cast<std::int64_t>(delta) * delta;
  RadicalSum theta_gap = root(8) - root(5) - root(d2 + 4) + root(d2 + 1);
  return theta_gap * Rational(k) + (root(d2 + 4) + root(5)) * Rational(delta) + root(2, 2 * (n - 1 - 2 * delta));
}

double min_so_delta_bound(int n, int delta) {
  check_delta_params(n, delta);
  const double d = delta;
  const double hub_branch = std::sqrt(d * d + 4.0) + std::sqrt(5.0);
  if (2 * delta <= n - 1) return d * hub_branch + 2.0 * (n - 2 * delta - 1) * std::sqrt(2.0);
  return (n - 1 - delta) * hub_branch + (2 * delta - n + 1) * std::sqrt(d * d + 1.0);
}

RadicalSum min_so_delta_bound_exact(int n, int delta) {
  check_delta_params(n, delta);
  const std::int64_t d2 = static_cast<std::int64_t>(delta) * delta;
  RadicalSum hub_branch = root(d2 + 4) + root(5);
  if (2 * delta <= n - 1) return hub_branch * Rational(delta) + root(2, 2 * (n - 2 * delta - 1));
  return hub_branch * Rational(n - 1 - delta) + root(d2 + 1, 2 * delta - n + 1);
}

double lollipop_so(int n) {
  if (n < 5) throw FamilyError("lollipops exist only for n >= 5");
  return std::sqrt(5.0) + 3.0 * std::sqrt(13.0) + 2.0 * std::sqrt(2.0) * (n - 4);
}

RadicalSum lollipop_so_exact(int n) {
  if (n < 5) throw FamilyError("lollipops exist only for n >= 5");
  return root(5) + root(13, 3) + root(2, 2 * (n - 4));
}

double cycle_with_pendant_so(int n) {
  if (n < 4) throw FamilyError("cycle_with_pendant needs n >= 4");
  return 2.0 * std::sqrt(2.0) * (n - 3) + 2.0 * std::sqrt(13.0) + std::sqrt(10.0);
}

RadicalSum cycle_with_pendant_so_exact(int n) {
  if (n < 4) throw FamilyError("cycle_with_pendant needs n >= 4");
  return root(2, 2 * (n - 3)) + root(13, 2) + root(10);
}

double max_so_unicyclic(int n, int g) {
  check_unicyclic_params(n, g);
  const double hub = n - g + 2;
  return 2.0 * std::sqrt(hub * hub + 4.0) + (n - g) * std::sqrt(hub * hub + 1.0) + 2.0 * std::sqrt(2.0) * (g - 2);
}

RadicalSum max_so_unicyclic_exact(int n, int g) {
  check_unicyclic_params(n, g);
  const std::int64_t hub = n - g + 2;
  return root(hub * hub + 4, 2) + root(hub * hub + 1, n - g) + root(2, 2 * (g - 2));
}

double max_so_pendent(int n, int k) {
  check_pendent_params(n, k);
  const double c = n - k - 1;  // degree of a non-hub clique vertex
  const double top = n - 1;
  return (n - k - 2) * c * c / std::sqrt(2.0) + k * std::sqrt(top * top + 1.0) +
         c * std::sqrt(top * top + c * c);
}

RadicalSum max_so_pendent_exact(int n, int k) {
  check_pendent_params(n, k);
  const std::int64_t c = n - k - 1;
  const std::int64_t top = n - 1;
  // x / sqrt 2 = (x / 2) sqrt 2
  return root(2, Rational((n - k - 2) * c * c, 2)) + root(top * top + 1, k) + root(top * top + c * c, c);
}

}  // namespace sombor
