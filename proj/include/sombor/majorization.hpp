#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sombor/rational.hpp"

namespace sombor {

class MajorizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two non-increasing sequences of equal length and equal sum.
struct MajorizationPair {
  std::vector<Rational> a;
  std::vector<Rational> b;

  /// Throws MajorizationError on unequal lengths, unequal sums, or an
  /// unsorted sequence.
  void validate() const;
};

/// Every prefix sum of p.a is at least the matching prefix sum of p.b.
bool majorizes(const MajorizationPair& p);

/// A real function together with the interval on which the caller asserts it
/// is strictly convex. `exact`, when present, evaluates rational arguments
/// exactly and is used instead of `eval`.
struct ConvexFunction {
  std::string name;
  std::function<long double(long double)> eval;
  long double lo = 0.0L;
  long double hi = 0.0L;
  std::function<Rational(const Rational&)> exact;

  static ConvexFunction square();              // x^2 on [0, 1e6], exact
  static ConvexFunction sqrt_one_plus_square();  // sqrt(1 + x^2) on [0, 1e6]
};

/// sum f(a_i) - sum f(b_i), in long double.
long double karamata_gap(const ConvexFunction& f, const MajorizationPair& p);

/// Checks sum f(a_i) >= sum f(b_i) with equality exactly when a == b.
/// Requires majorizes(p), every entry inside [f.lo, f.hi], and passes a
/// midpoint-convexity probe on the entries' range; throws MajorizationError
/// otherwise. With f.exact the comparison is exact; otherwise equality means
/// a gap within 1e-12 relative.
bool karamata_check(const ConvexFunction& f, const MajorizationPair& p);

/// The sequence pair from the unicyclic upper-bound argument. cycle_degrees
/// lists d_1..d_g in cyclic order and k is the number of pendent edges, so
/// 2 <= d_i <= k + 2 and sum d_i = k + 2g. Returns
///   A = ((k+2)/2 twice, 1 repeated 2g-4, 2/(k+2) repeated k+2),
///   B = d_{i+1}/d_i repeated d_i for each i (cyclically),
/// both sorted non-increasing.
MajorizationPair unicyclic_majorization_witness(const std::vector<int>& cycle_degrees, int k);

/// Index t used by the pendant-shift argument: among d_i with
/// n-k-1 < d_i < n-1 the minimum value, taking its last occurrence so that
/// t != 0. Empty when every clique vertex but the hub has no pendants.
std::optional<std::size_t> shift_index(const std::vector<int>& clique_degrees);

/// The sequence pair from the pendant-count upper-bound argument. Degrees
/// d_1 >= ... >= d_{n-k} of the clique vertices must satisfy
/// sum d_i = k + (n-k)(n-k-1) and n-k-1 <= d_i < n-1; n and k are recovered
/// from the sum. For each i other than 1 and t the blocks (d_1+1)/d_i and
/// (d_t-1)/d_i (A) and d_1/d_i and d_t/d_i (B) each appear d_i times; both
/// sequences are sorted non-increasing. t is 0-based.
MajorizationPair pendant_shift_majorization_witness(const std::vector<int>& clique_degrees, std::size_t t);

/// (x+1) sqrt((x+a)^2+1) + y sqrt((y+a-1)^2+1)
///   >= x sqrt((x+a-1)^2+1) + (y+1) sqrt((y+a)^2+1)
/// for x >= y >= 0 and a >= 1, with -1e-12 slack.
bool phi_inequality_check(double x, double y, double a);

}  // namespace sombor
