#include <doctest.h>

#include "sombor/enumeration.hpp"
#include "sombor/families.hpp"
#include "sombor/lemmas.hpp"
#include "sombor/sombor.hpp"

using namespace sombor;

TEST_CASE("path shift on a spider with branches 1 and 3") {
  // hub needs degree >= 3 for pendent paths; use branches 1, 1, 3
  Graph g = star_like_tree({6, 3, 2, {3}});
  LemmaTally t = pendent_path_shift_tally(g);
  CHECK(t.checked == 6);
  CHECK(t.violations == 0);
  CHECK(lemma_pendent_path_suite(g));
}

TEST_CASE("path shift suites over small trees and unicyclic graphs") {
  LemmaTally total;
  for (int n = 4; n <= 8; ++n) {
    for (const Graph& g : trees(n)) total += pendent_path_shift_tally(g);
    for (const Graph& g : unicyclic_graphs(n)) total += pendent_path_shift_tally(g);
  }
  CHECK(total.checked > 0);
  CHECK(total.violations == 0);
}

TEST_CASE("graphs without two pendent paths are vacuous") {
  CHECK(pendent_path_shift_tally(cycle(6)).checked == 0);
  CHECK(pendent_path_shift_tally(path(6)).checked == 0);
  CHECK(pendent_path_shift_tally(lollipop(7, 4)).checked == 0);
}

TEST_CASE("contraction on two triangles joined by a bridge") {
  Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  LemmaTally t = contraction_tally(g);
  CHECK(t.checked == 2);
  CHECK(t.violations == 0);
}

TEST_CASE("contraction on P_4") {
  Graph p4 = path(4);
  CHECK(contraction_tally(p4).checked == 2);
  CHECK(lemma_contraction_suite(p4));
  CHECK(compare(RadicalSum::sqrt_of(10, 3), sombor_exact(p4)) == std::strong_ordering::greater);
  CHECK(sombor_exact(p4) == RadicalSum::sqrt_of(5, 2) + RadicalSum::sqrt_of(2, 2));
}

TEST_CASE("contraction suite over connected graphs up to order 6") {
  LemmaTally total;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) total += contraction_tally(g);
  CHECK(total.checked > 0);
  CHECK(total.violations == 0);
}
