#include <doctest.h>

#include <cmath>
#include <set>

#include "sombor/enumeration.hpp"
#include "sombor/families.hpp"
#include "sombor/graph_io.hpp"
#include "sombor/report.hpp"
#include "sombor/sombor.hpp"
#include "sombor/theorems.hpp"

using namespace sombor;

TEST_CASE("theorem ids round trip") {
  for (TheoremId id : all_theorems()) CHECK(parse_theorem_id(to_string(id)) == id);
  CHECK_THROWS_AS(parse_theorem_id("nope"), std::invalid_argument);
}

TEST_CASE("min-delta n=8 delta=3") {
  TheoremReport r = verify_theorem(TheoremId::kMinDelta, {8, 3, {}, {}, {}});
  CHECK(r.bound_matches);
  CHECK(r.characterization_holds);
  CHECK(r.witnesses.size() == star_like_partitions(8, 3, 0).size());
  CHECK(r.passed());
}

TEST_CASE("unicyclic-max n=8 g=4") {
  TheoremReport r = verify_theorem(TheoremId::kUnicyclicMax, {8, {}, 4, {}, {}});
  CHECK(r.passed());
  REQUIRE(r.witnesses.size() == 1);
  CHECK(are_isomorphic(from_graph6(r.witnesses[0]), u_n_g(8, 4)));
}

TEST_CASE("pendent-max n=7 k=3") {
  TheoremReport r = verify_theorem(TheoremId::kPendentMax, {7, {}, {}, 3, {}});
  CHECK(r.passed());
  REQUIRE(r.witnesses.size() == 1);
  CHECK(are_isomorphic(from_graph6(r.witnesses[0]), kite_with_pendants(7, 3)));
  CHECK(r.search_value.value() == doctest::Approx(51.10082).epsilon(1e-6));
}

TEST_CASE("girth-min modes") {
  CHECK(verify_theorem(TheoremId::kGirthMin, {7, {}, 4, {}, {}}).passed());
  CHECK(verify_theorem(TheoremId::kGirthMin, {7, {}, 7, {}, {}}).passed());
  TheoremReport pooled = verify_theorem(TheoremId::kGirthMin, {8, {}, {}, {}, {}});
  CHECK(pooled.passed());
  CHECK(pooled.witnesses.size() == 4);  // lollipops with g = 3..6
  CHECK(verify_theorem(TheoremId::kUnicyclicMin, {6, {}, {}, {}, {}}).passed());
}

TEST_CASE("girth-min agrees between the unicyclic and general universes") {
  for (int n = 5; n <= 8; ++n)
    for (int g = 3; g <= n - 2; ++g) {
      GraphClassSpec spec{.order = n, .girth = g, .unicyclic = true};
      auto wide = extremal_search(spec, Objective::kMin, Universe::kGeneral);
      CHECK(wide.optimum == lollipop_so_exact(n));
      REQUIRE(wide.witnesses.size() == 1);
      CHECK(are_isomorphic(wide.witnesses[0], lollipop(n, g)));
    }
}

TEST_CASE("C_{n,1} exceeds the lollipop value") {
  for (int n = 5; n <= 12; ++n)
    CHECK(compare(cycle_with_pendant_so_exact(n), lollipop_so_exact(n)) == std::strong_ordering::greater);
}

TEST_CASE("parameter and cap errors come before any work") {
  CHECK_THROWS_AS(check_theorem_params(TheoremId::kPendentMax, {12, {}, {}, 3, {}}), CapExceeded);
  CHECK_THROWS_AS(verify_theorem(TheoremId::kPendentMax, {12, {}, {}, 3, {}}), CapExceeded);
  CHECK_THROWS_AS(verify_theorem(TheoremId::kUnicyclicMax, {13, {}, 4, {}, {}}), CapExceeded);
  CHECK_THROWS_AS(check_theorem_params(TheoremId::kMinDelta, {6, 6, {}, {}, {}}), TheoremParamError);
  CHECK_THROWS_AS(check_theorem_params(TheoremId::kMinDelta, {6, {}, {}, {}, {}}), TheoremParamError);
  CHECK_THROWS_AS(check_theorem_params(TheoremId::kGirthMin, {7, {}, 6, {}, {}}), TheoremParamError);
  CHECK_THROWS_AS(check_theorem_params(TheoremId::kPendentMax, {7, {}, {}, 5, {}}), TheoremParamError);
  CHECK_NOTHROW(check_theorem_params(TheoremId::kCutEdgeMax, {7, {}, {}, {}, 4}));
}

TEST_CASE("cut-edge maximizers have only pendent cut edges") {
  CHECK(proposition_cut_edges_check(6, 2));
  CHECK(proposition_cut_edges_check(7, 1));
  // trees of order n have n - 1 cut edges; the maximizer is the star
  ExtremalResult stars = extremal_search({.order = 7, .cut_edge_count = 6}, Objective::kMax, Universe::kGeneral);
  REQUIRE(stars.witnesses.size() == 1);
  CHECK(max_degree(stars.witnesses[0]) == 6);
  CHECK(proposition_cut_edges_check(7, 6));
}

TEST_CASE("report serialization") {
  TheoremReport r = verify_theorem(TheoremId::kUnicyclicMax, {6, {}, 3, {}, {}});
  auto j = to_json(r);
  CHECK(j["theorem"] == "unicyclic-max");
  CHECK(j["params"]["n"] == 6);
  CHECK(j["params"]["g"] == 3);
  CHECK(j["bound_matches"] == true);
  // witnesses round-trip to the reported value
  for (const auto& code : j["witnesses_graph6"])
    CHECK(sombor_exact(from_graph6(code.get<std::string>())) ==
          radical_terms_from_json(j["optimum_radical_terms"]));
  CHECK(csv_header() == "theorem,params,bound,optimum,match,witness_count,seconds");
  const std::string row = to_csv_row(r);
  CHECK(row.rfind("unicyclic-max,n=6;g=3,", 0) == 0);
  CHECK(row.find(",true,1,") != std::string::npos);
}

TEST_CASE("format_value uses 12 significant digits") {
  CHECK(format_value(14.142135623730951) == "14.1421356237");
  CHECK(format_value(std::sqrt(2.0)) == "1.41421356237");
}
