#pragma once

#include <stdexcept>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/radical_sum.hpp"

// Extremal graph families and their closed-form Sombor values.
//
// Labeling conventions (stable, so graph6 fixtures do not drift):
//   path(n)                 0-1-...-(n-1)
//   cycle(n)                0-1-...-(n-1)-0
//   star_like_tree          hub 0, pendant neighbours 1..k, then each branch
//                           as a run of consecutive ids, nearest the hub first
//   lollipop(n,g)           cycle 0..g-1, path g..n-1 hanging from 0
//   cycle_with_pendant(n)   cycle 0..n-2, pendant n-1 on 0
//   u_n_g(n,g)              cycle 0..g-1, pendants g..n-1 on 0
//   kite_with_pendants(n,k) clique 0..n-k-1, pendants n-k..n-1 on 0
//
// Every *_so evaluator is a direct formula evaluation in double precision;
// the *_so_exact twin assembles the same formula as a RadicalSum. Neither
// builds a graph.

namespace sombor {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Tree of order n whose hub has degree delta, with `pendant_count` leaf
/// neighbours and delta - pendant_count further branches of length >= 2.
struct StarLikeSpec {
  int n = 0;
  int delta = 0;
  int pendant_count = 0;
  std::vector<int> branch_lengths;
};

/// Throws FamilyError describing the first violated condition.
void validate(const StarLikeSpec& spec);

/// True iff some StarLikeSpec with these parameters exists.
bool star_like_feasible(int n, int delta, int k);

/// All branch-length multisets (non-increasing) for the given parameters.
std::vector<std::vector<int>> star_like_partitions(int n, int delta, int k);

Graph path(int n);
Graph cycle(int n);
Graph star_like_tree(const StarLikeSpec& spec);
Graph lollipop(int n, int g);
Graph cycle_with_pendant(int n);
Graph u_n_g(int n, int g);
Graph kite_with_pendants(int n, int k);

/// Edge lists behind cycle() and cycle_with_pendant(), without the order cap.
std::vector<Edge> cycle_edges(int n);
std::vector<Edge> cycle_with_pendant_edges(int n);

/// Tree with exactly one vertex of degree greater than two.
bool is_star_like_tree(const Graph& g);

/// 0, sqrt 2, then 2 sqrt 5 + 2 sqrt 2 (n - 3) for n >= 3.
double path_so(int n);
RadicalSum path_so_exact(int n);

double cycle_so(int n);
RadicalSum cycle_so_exact(int n);

/// k(theta(2) - theta(delta)) + delta(sqrt(delta^2+4) + sqrt 5) + 2(n-1-2 delta) sqrt 2
double star_like_so(int n, int delta, int k);
RadicalSum star_like_so_exact(int n, int delta, int k);

/// Minimum SO over connected graphs of order n with maximum degree delta >= 3.
double min_so_delta_bound(int n, int delta);
RadicalSum min_so_delta_bound_exact(int n, int delta);

/// sqrt 5 + 3 sqrt 13 + 2 sqrt 2 (n - 4); the value of every lollipop of order n.
double lollipop_so(int n);
RadicalSum lollipop_so_exact(int n);

/// 2 sqrt 2 (n - 3) + 2 sqrt 13 + sqrt 10.
double cycle_with_pendant_so(int n);
RadicalSum cycle_with_pendant_so_exact(int n);

/// Maximum SO over unicyclic graphs of order n and girth g.
double max_so_unicyclic(int n, int g);
RadicalSum max_so_unicyclic_exact(int n, int g);

/// Maximum SO over connected graphs of order n with k pendent vertices;
/// the same expression bounds graphs with k cut edges.
double max_so_pendent(int n, int k);
RadicalSum max_so_pendent_exact(int n, int k);
inline double max_so_cut_edges(int n, int r) { return max_so_pendent(n, r); }
inline RadicalSum max_so_cut_edges_exact(int n, int r) { return max_so_pendent_exact(n, r); }

}  // namespace sombor
