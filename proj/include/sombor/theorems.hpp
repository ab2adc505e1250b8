#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sombor/enumeration.hpp"
#include "sombor/graph.hpp"
#include "sombor/radical_sum.hpp"

namespace sombor {

/// Stable identifiers for the extremal results that can be checked by
/// exhaustive search.
enum class TheoremId {
  kMinDelta,      // min SO, order n, maximum degree delta
  kGirthMin,      // min SO, order n, girth g (lollipop)
  kUnicyclicMin,  // the cycle minimizes SO among unicyclic graphs
  kUnicyclicMax,  // max SO, unicyclic, girth g (U_{n,g})
  kPendentMax,    // max SO, k pendent vertices (kite with pendants)
  kCutEdgeMax,    // max SO, r cut edges (kite with pendants)
};

const char* to_string(TheoremId id);
/// Accepts min-delta, girth-min, unicyclic-min, unicyclic-max, pendent-max,
/// cutedge-max. Throws std::invalid_argument otherwise.
TheoremId parse_theorem_id(const std::string& text);
std::vector<TheoremId> all_theorems();

class TheoremParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n plus whichever second parameter the theorem takes: delta (min-delta),
/// g (girth-min, unicyclic-max), k (pendent-max), r (cutedge-max).
/// girth-min without g checks the pooled class of all unicyclic graphs other
/// than C_n, whose minimizers are all lollipops of order n.
struct TheoremParams {
  int n = 0;
  std::optional<int> delta;
  std::optional<int> g;
  std::optional<int> k;
  std::optional<int> r;

  std::string describe() const;  // "n=8;delta=3"
};

struct TheoremReport {
  TheoremId id = TheoremId::kMinDelta;
  TheoremParams params;
  RadicalSum bound_value;
  RadicalSum search_value;
  /// Exact equality of bound_value and search_value.
  bool bound_matches = false;
  /// The search's witnesses are exactly the predicted extremal graphs, up to
  /// isomorphism.
  bool characterization_holds = false;
  std::vector<std::string> witnesses;  // graph6, canonical labeling
  std::vector<std::string> predicted;  // graph6 of the predicted family
  long class_size = 0;
  double seconds = 0.0;

  bool passed() const { return bound_matches && characterization_holds; }
};

/// Validates the parameters and the enumeration cap, then runs the
/// exhaustive search and compares it with the closed form and the predicted
/// family. Throws TheoremParamError or CapExceeded before doing any work.
TheoremReport verify_theorem(TheoremId id, const TheoremParams& params, int workers = 1);

/// Raises TheoremParamError / CapExceeded exactly as verify_theorem would.
void check_theorem_params(TheoremId id, const TheoremParams& params);

/// Every maximizer of SO among connected graphs of order n with k cut edges
/// has only pendent cut edges.
bool proposition_cut_edges_check(int n, int k, int workers = 1);

}  // namespace sombor
