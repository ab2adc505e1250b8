#include "sombor/sombor.hpp"

#include <map>
#include <set>
#include <string>

#include <cmath>
#include <stdexcept>

namespace sombor {

double edge_term(int du, int dv) {
  if (du < 1 || dv < 1) throw std::domain_error("edge_term needs degrees >= 1");
  return std::sqrt(static_cast<double>(du) * du + static_cast<double>(dv) * dv);
}

RadicalSum edge_term_exact(int du, int dv) {
  if (du < 1 || dv < 1) throw std::domain_error("edge_term needs degrees >= 1");
  return RadicalSum::sqrt_of(static_cast<std::uint64_t>(du) * du + static_cast<std::uint64_t>(dv) * dv);
}

double sombor_index(const Graph& g) {
  const auto deg = g.degrees();
  double total = 0.0;
  for (const Edge& e : g.edges()) total += edge_term(deg[e.u], deg[e.v]);
  return total;
}

RadicalSum sombor_exact(const Graph& g) {
  const auto deg = g.degrees();
  // Group by radicand first; each distinct value is reduced once.
  std::vector<std::int64_t> count(2 * Graph::kMaxOrder * Graph::kMaxOrder + 1, 0);
  for (const Edge& e : g.edges()) ++count[deg[e.u] * deg[e.u] + deg[e.v] * deg[e.v]];
  RadicalSum total;
  for (std::size_t r = 0; r < count.size(); ++r)
    if (count[r]) total += RadicalSum::sqrt_of(r, count[r]);
  return total;
}

RadicalSum sombor_exact(int n, std::span<const Edge> edges) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<int> deg(n, 0);
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw VertexOutOfRange("edge endpoint out of range");
    if (e.u == e.v) throw SelfLoop("self-loop at " + std::to_string(e.u));
    if (!seen.insert(e.normalized()).second) throw DuplicateEdge("duplicate edge");
    ++deg[e.u];
    ++deg[e.v];
  }
  std::map<std::uint64_t, std::int64_t> count;
  for (const Edge& e : edges)
    ++count[static_cast<std::uint64_t>(deg[e.u]) * deg[e.u] + static_cast<std::uint64_t>(deg[e.v]) * deg[e.v]];
  RadicalSum total;
  for (const auto& [r, c] : count) total += RadicalSum::sqrt_of(r, c);
  return total;
}

double theta(double t) {
  if (!(t >= 0.0)) throw std::domain_error("theta needs t >= 0");
  return std::sqrt(t * t + 4.0) - std::sqrt(t * t + 1.0);
}

}  // namespace sombor
