#pragma once

#include "sombor/graph.hpp"

namespace sombor {

/// How many surgeries were applied and how many failed the claimed strict
/// inequality.
struct LemmaTally {
  long checked = 0;
  long violations = 0;

  LemmaTally& operator+=(const LemmaTally& other) {
    checked += other.checked;
    violations += other.violations;
    return *this;
  }
};

/// Applies transform_path_shift to every ordered pair of distinct pendent
/// paths (shared origins included) and counts pairs where SO does not
/// strictly decrease. Strictness is decided on exact radical sums.
LemmaTally pendent_path_shift_tally(const Graph& g);
inline bool lemma_pendent_path_suite(const Graph& g) { return pendent_path_shift_tally(g).violations == 0; }

/// Contracts every non-pendent cut edge, in both orientations, and counts
/// cases where SO does not strictly increase.
LemmaTally contraction_tally(const Graph& g);
inline bool lemma_contraction_suite(const Graph& g) { return contraction_tally(g).violations == 0; }

}  // namespace sombor
