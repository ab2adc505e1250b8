#include "sombor/lemmas.hpp"

#include "sombor/sombor.hpp"

namespace sombor {

LemmaTally pendent_path_shift_tally(const Graph& g) {
  LemmaTally tally;
  const auto paths = pendent_paths(g);
  if (paths.size() < 2) return tally;
  const RadicalSum before = sombor_exact(g);
  for (const PendentPath& p : paths) {
    for (const PendentPath& q : paths) {
      if (p == q) continue;
      Graph shifted = transform_path_shift(g, p, q);
      ++tally.checked;
      if (compare(before, sombor_exact(shifted)) <= 0) ++tally.violations;
    }
  }
  return tally;
}

LemmaTally contraction_tally(const Graph& g) {
  LemmaTally tally;
  if (!is_connected(g)) return tally;
  const RadicalSum before = sombor_exact(g);
  for (const Edge& e : bridges(g)) {
    if (g.degree(e.u) < 2 || g.degree(e.v) < 2) continue;
    for (Edge oriented : {e, Edge{e.v, e.u}}) {
      Graph contracted = transform_contract_pendant(g, oriented);
      ++tally.checked;
      if (compare(sombor_exact(contracted), before) <= 0) ++tally.violations;
    }
  }
  return tally;
}

}  // namespace sombor
