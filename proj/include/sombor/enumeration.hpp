#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/radical_sum.hpp"

namespace sombor {

/// Largest orders the generators accept. Fixed, not configurable: a search
/// result is only meaningful if its universe is complete.
inline constexpr int kConnectedCap = 9;
inline constexpr int kLabeledOracleCap = 6;
inline constexpr int kTreeCap = 12;
inline constexpr int kUnicyclicCap = 12;

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class EmptyClass : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One representative per isomorphism class of connected graphs on n
/// vertices, each in canonical_form() labeling, sorted by certificate.
/// Grown vertex by vertex: every connected graph has a vertex whose removal
/// leaves it connected.
std::vector<Graph> connected_graphs(int n);

/// The slow reference: all 2^(n(n-1)/2) labeled graphs, filtered for
/// connectivity and deduplicated with canonical_code. n <= 6.
std::vector<Graph> connected_graphs_labeled(int n);

std::vector<Graph> trees(int n);
std::vector<Graph> unicyclic_graphs(int n);

enum class Universe { kGeneral, kTrees, kUnicyclic };
enum class Objective { kMin, kMax };

const char* to_string(Universe u);
const char* to_string(Objective o);

/// Constraint record for a graph class. Absent fields are unconstrained.
struct GraphClassSpec {
  int order = 1;
  std::optional<int> max_degree;
  std::optional<int> girth;
  std::optional<int> pendent_count;
  std::optional<int> cut_edge_count;
  std::optional<bool> unicyclic;
  std::optional<bool> tree;

  /// Throws std::invalid_argument on inconsistent constraints.
  void validate() const;
  std::string describe() const;
};

/// G is connected, has the spec's order and satisfies every present
/// constraint. A girth constraint rejects acyclic graphs.
bool matches(const Graph& g, const GraphClassSpec& spec);

struct ExtremalResult {
  RadicalSum optimum;
  double optimum_float = 0.0;
  /// Every graph attaining the optimum, one per isomorphism class.
  std::vector<Graph> witnesses;
  /// Members of the class (graphs of the universe that match the spec).
  long class_size = 0;
  /// Graphs of the universe examined.
  long universe_size = 0;
};

/// Exhaustive optimum of SO over the universe filtered by spec. Floating
/// values only short-list candidates; the optimum and ties are settled on
/// exact radical sums. The result does not depend on `workers`.
ExtremalResult extremal_search(const GraphClassSpec& spec, Objective objective, Universe universe,
                               int workers = 1);

/// Same search over an explicit candidate list.
ExtremalResult extremal_search_in(const std::vector<Graph>& universe, const GraphClassSpec& spec,
                                  Objective objective, int workers = 1);

/// The generator for a universe, with its cap enforced.
std::vector<Graph> universe_graphs(Universe universe, int n);
int universe_cap(Universe universe);

}  // namespace sombor
