#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sombor/majorization.hpp"

using namespace sombor;

namespace {

MajorizationPair pair_of(std::vector<int> a, std::vector<int> b) {
  return {{a.begin(), a.end()}, {b.begin(), b.end()}};
}

}  // namespace

TEST_CASE("majorizes") {
  CHECK(majorizes(pair_of({3, 1}, {2, 2})));
  CHECK(majorizes(pair_of({2, 2}, {2, 2})));
  CHECK_FALSE(majorizes(pair_of({2, 2, 2}, {3, 2, 1})));
  CHECK(majorizes(pair_of({3, 2, 1}, {2, 2, 2})));
}

TEST_CASE("pair validation") {
  CHECK_THROWS_AS(pair_of({3, 1}, {2, 1}).validate(), MajorizationError);     // sums differ
  CHECK_THROWS_AS(pair_of({3, 1}, {4}).validate(), MajorizationError);        // lengths differ
  CHECK_THROWS_AS(pair_of({1, 3}, {2, 2}).validate(), MajorizationError);     // not sorted
  CHECK_THROWS_AS(majorizes(pair_of({1, 3}, {2, 2})), MajorizationError);
}

TEST_CASE("karamata") {
  auto sq = ConvexFunction::square();
  auto root = ConvexFunction::sqrt_one_plus_square();
  CHECK(karamata_gap(sq, pair_of({3, 1}, {2, 2})) == 2.0L);
  CHECK(karamata_check(sq, pair_of({3, 1}, {2, 2})));
  CHECK(karamata_check(root, pair_of({5, 3, 1}, {5, 3, 1})));
  CHECK(karamata_gap(root, pair_of({5, 3, 1}, {5, 3, 1})) == 0.0L);
  CHECK_THROWS_AS(karamata_check(sq, pair_of({2, 2, 2}, {3, 2, 1})), MajorizationError);
  MajorizationPair fractional{{Rational(7, 2), Rational(1, 2)}, {Rational(2), Rational(2)}};
  CHECK(karamata_check(root, fractional));
}

TEST_CASE("karamata rejects functions that are not convex on the range") {
  ConvexFunction concave{"sqrt", [](long double x) { return std::sqrt(x); }, 0.0L, 100.0L, {}};
  CHECK_THROWS_AS(karamata_check(concave, pair_of({3, 1}, {2, 2})), MajorizationError);
  ConvexFunction narrow = ConvexFunction::square();
  narrow.hi = 2.0L;
  CHECK_THROWS_AS(karamata_check(narrow, pair_of({3, 1}, {2, 2})), MajorizationError);
}

TEST_CASE("karamata on random transfer-built pairs") {
  std::mt19937 rng(41);
  auto sq = ConvexFunction::square();
  auto root = ConvexFunction::sqrt_one_plus_square();
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> a(2 + trial % 6);
    for (int& x : a) x = std::uniform_int_distribution<int>(0, 12)(rng);
    std::sort(a.rbegin(), a.rend());
    std::vector<int> b = a;
    int i = 0, j = static_cast<int>(b.size()) - 1;
    if (b[i] > b[j]) {
      int amount = std::uniform_int_distribution<int>(1, b[i] - b[j])(rng);
      b[i] -= amount;
      b[j] += amount;
      std::sort(b.rbegin(), b.rend());
    }
    auto p = pair_of(a, b);
    CHECK(majorizes(p));
    CHECK(karamata_check(sq, p));
    CHECK(karamata_check(root, p));
    CHECK((karamata_gap(sq, p) == 0.0L) == (a == b));
  }
}

TEST_CASE("unicyclic witness") {
  // U_{5,3}-like: hub 4 on a triangle, k = 2
  auto p = unicyclic_majorization_witness({4, 2, 2}, 2);
  CHECK_NOTHROW(p.validate());
  CHECK(majorizes(p));
  // C_g: no pendants
  auto c = unicyclic_majorization_witness({2, 2, 2, 2, 2}, 0);
  CHECK(majorizes(c));
  CHECK(c.a == c.b);
  CHECK_THROWS_AS(unicyclic_majorization_witness({4, 2, 2}, 3), MajorizationError);
  CHECK_THROWS_AS(unicyclic_majorization_witness({1, 2, 2}, 0), MajorizationError);
}

TEST_CASE("pendant-shift witness") {
  // n = 7, k = 3: clique K_4 with pendants 2 + 1
  const std::vector<int> d{5, 4, 3, 3};
  auto t = shift_index(d);
  REQUIRE(t.has_value());
  CHECK(d[*t] == 4);
  auto p = pendant_shift_majorization_witness(d, *t);
  CHECK_NOTHROW(p.validate());
  CHECK(majorizes(p));
  // all pendants on the hub: the extremal graph itself, no valid t
  CHECK_FALSE(shift_index({6, 3, 3, 3}).has_value());
  CHECK_THROWS_AS(pendant_shift_majorization_witness({6, 3, 3, 3}, 1), MajorizationError);
  CHECK_THROWS_AS(pendant_shift_majorization_witness(d, 0), MajorizationError);
}

TEST_CASE("phi inequality") {
  for (double x : {0.0, 1.0, 4.5}) CHECK(phi_inequality_check(x, x, 2.0));
  CHECK(phi_inequality_check(3, 1, 2));
  for (double a : {1.0, 1.5, 2.0, 5.0})
    for (double x = 0; x <= 10; x += 0.25)
      for (double y = 0; y <= x; y += 0.25) CHECK(phi_inequality_check(x, y, a));
}
