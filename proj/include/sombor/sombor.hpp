#pragma once

#include <span>

#include "sombor/graph.hpp"
#include "sombor/radical_sum.hpp"

namespace sombor {

/// sqrt(du^2 + dv^2). Throws std::domain_error unless both degrees are >= 1.
double edge_term(int du, int dv);
RadicalSum edge_term_exact(int du, int dv);

/// Sum of edge_term over all edges; 0 for edgeless graphs.
double sombor_index(const Graph& g);

/// The same sum with every radicand reduced to squarefree form.
RadicalSum sombor_exact(const Graph& g);

/// SO of the simple graph on n vertices with this edge list, for any n.
/// Lets closed forms be checked on orders beyond the Graph cap.
RadicalSum sombor_exact(int n, std::span<const Edge> edges);

/// sqrt(t^2 + 4) - sqrt(t^2 + 1), strictly decreasing on [0, inf).
double theta(double t);

}  // namespace sombor
