#include "sombor/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sombor {
namespace {

bool non_increasing(const std::vector<Rational>& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] > s[i - 1]) return false;
  return true;
}

Rational total(const std::vector<Rational>& s) {
  Rational sum;
  for (const Rational& x : s) sum += x;
  return sum;
}

void sort_desc(std::vector<Rational>& s) { std::sort(s.begin(), s.end(), std::greater<>()); }

void append(std::vector<Rational>& s, const Rational& value, int copies) {
  s.insert(s.end(), static_cast<std::size_t>(copies), value);
}

}  // namespace

void MajorizationPair::validate() const {
  if (a.size() != b.size())
    throw MajorizationError("sequences have lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  if (!non_increasing(a)) throw MajorizationError("first sequence is not non-increasing");
  if (!non_increasing(b)) throw MajorizationError("second sequence is not non-increasing");
  Rational sa = total(a), sb = total(b);
  if (sa != sb) throw MajorizationError("sums differ: " + sa.to_string() + " vs " + sb.to_string());
}

bool majorizes(const MajorizationPair& p) {
  p.validate();
  Rational pa, pb;
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    pa += p.a[i];
    pb += p.b[i];
    if (pa < pb) return false;
  }
  return true;
}

ConvexFunction ConvexFunction::square() {
  ConvexFunction f;
  f.name = "x^2";
  f.eval = [](long double x) { return x * x; };
  f.exact = [](const Rational& x) { return x * x; };
  f.lo = 0.0L;
  f.hi = 1e6L;
  return f;
}

ConvexFunction ConvexFunction::sqrt_one_plus_square() {
  ConvexFunction f;
  f.name = "sqrt(1+x^2)";
  f.eval = [](long double x) { return std::sqrt(1.0L + x * x); };
  f.lo = 0.0L;
  f.hi = 1e6L;
  return f;
}

long double karamata_gap(const ConvexFunction& f, const MajorizationPair& p) {
  long double sa = 0.0L, sb = 0.0L;
  for (const Rational& x : p.a) sa += f.eval(x.to_long_double());
  for (const Rational& x : p.b) sb += f.eval(x.to_long_double());
  return sa - sb;
}

bool karamata_check(const ConvexFunction& f, const MajorizationPair& p) {
  if (!majorizes(p)) throw MajorizationError("karamata_check needs the first sequence to majorize the second");
  if (p.a.empty()) return true;
  long double lo = std::min(p.a.back(), p.b.back()).to_long_double();
  long double hi = std::max(p.a.front(), p.b.front()).to_long_double();
  if (lo < f.lo || hi > f.hi) throw MajorizationError("sequence entries leave the domain of " + f.name);

  if (hi > lo) {
    constexpr int kProbe = 64;
    for (int i = 0; i + 2 <= kProbe; ++i) {
      long double x = lo + (hi - lo) * i / kProbe;
      long double y = lo + (hi - lo) * (i + 2) / kProbe;
      long double mid = f.eval((x + y) / 2);
      long double chord = (f.eval(x) + f.eval(y)) / 2;
      if (mid > chord + 1e-15L * std::max(1.0L, std::fabs(chord)))
        throw MajorizationError(f.name + " fails the convexity probe on [" + std::to_string(static_cast<double>(lo)) +
                                ", " + std::to_string(static_cast<double>(hi)) + "]");
    }
  }

  const bool identical = p.a == p.b;
  if (f.exact) {
    Rational sa, sb;
    for (const Rational& x : p.a) sa += f.exact(x);
    for (const Rational& x : p.b) sb += f.exact(x);
    return identical ? sa == sb : sa > sb;
  }
  long double scale = 1.0L;
  for (const Rational& x : p.a) scale = std::max(scale, std::fabs(f.eval(x.to_long_double())));
  long double tol = 1e-12L * scale * static_cast<long double>(p.a.size());
  long double gap = karamata_gap(f, p);
  return identical ? std::fabs(gap) <= tol : gap > tol;
}

MajorizationPair unicyclic_majorization_witness(const std::vector<int>& cycle_degrees, int k) {
  const int g = static_cast<int>(cycle_degrees.size());
  if (g < 3) throw MajorizationError("a cycle needs at least 3 vertices");
  if (k < 0) throw MajorizationError("pendent edge count must be >= 0");
  for (int d : cycle_degrees)
    if (d < 2 || d > k + 2)
      throw MajorizationError("cycle degree " + std::to_string(d) + " outside [2, k+2] = [2, " + std::to_string(k + 2) + "]");
  const int sum = std::accumulate(cycle_degrees.begin(), cycle_degrees.end(), 0);
  if (sum != k + 2 * g)
    throw MajorizationError("cycle degrees sum to " + std::to_string(sum) + ", expected k + 2g = " +
                            std::to_string(k + 2 * g));

  MajorizationPair p;
  append(p.a, Rational(k + 2, 2), 2);
  append(p.a, Rational(1), 2 * g - 4);
  append(p.a, Rational(2, k + 2), k + 2);
  for (int i = 0; i < g; ++i) {
    int here = cycle_degrees[i], next = cycle_degrees[(i + 1) % g];
    append(p.b, Rational(next, here), here);
  }
  sort_desc(p.a);
  sort_desc(p.b);
  return p;
}

std::optional<std::size_t> shift_index(const std::vector<int>& clique_degrees) {
  const int m = static_cast<int>(clique_degrees.size());
  if (m < 2) return std::nullopt;
  const int sum = std::accumulate(clique_degrees.begin(), clique_degrees.end(), 0);
  const int k = sum - m * (m - 1);
  const int n = m + k;
  std::optional<std::size_t> best;
  for (std::size_t i = 1; i < clique_degrees.size(); ++i) {
    int d = clique_degrees[i];
    if (d > m - 1 && d < n - 1 && (!best || d <= clique_degrees[*best])) best = i;
  }
  return best;
}

MajorizationPair pendant_shift_majorization_witness(const std::vector<int>& clique_degrees, std::size_t t) {
  const int m = static_cast<int>(clique_degrees.size());
  if (m < 3) throw MajorizationError("the clique needs at least 3 vertices");
  for (int i = 1; i < m; ++i)
    if (clique_degrees[i] > clique_degrees[i - 1]) throw MajorizationError("clique degrees must be non-increasing");
  const int sum = std::accumulate(clique_degrees.begin(), clique_degrees.end(), 0);
  const int k = sum - m * (m - 1);
  if (k < 0) throw MajorizationError("clique degrees sum below (n-k)(n-k-1)");
  const int n = m + k;
  for (int d : clique_degrees)
    if (d < m - 1 || d > n - 1)
      throw MajorizationError("clique degree " + std::to_string(d) + " outside [n-k-1, n-1] = [" +
                              std::to_string(m - 1) + ", " + std::to_string(n - 1) + "]");
  auto expected = shift_index(clique_degrees);
  // With a shift index present every degree is below n-1.
  if (!expected) throw MajorizationError("no clique vertex other than the hub carries pendants");
  if (t == 0 || t >= clique_degrees.size() || clique_degrees[t] != clique_degrees[*expected])
    throw MajorizationError("index " + std::to_string(t) + " does not select the smallest degree in (n-k-1, n-1)");

  const int d1 = clique_degrees[0], dt = clique_degrees[t];
  MajorizationPair p;
  for (int i = 1; i < m; ++i) {
    if (static_cast<std::size_t>(i) == t) continue;
    const int di = clique_degrees[i];
    append(p.a, Rational(d1 + 1, di), di);
    append(p.a, Rational(dt - 1, di), di);
    append(p.b, Rational(d1, di), di);
    append(p.b, Rational(dt, di), di);
  }
  sort_desc(p.a);
  sort_desc(p.b);
  return p;
}

bool phi_inequality_check(double x, double y, double a) {
  if (!(x >= y && y >= 0.0 && a >= 1.0))
    throw std::invalid_argument("phi inequality needs x >= y >= 0 and a >= 1");
  auto term = [](double coeff, double shift) { return coeff * std::sqrt(shift * shift + 1.0); };
  double lhs = term(x + 1, x + a) + term(y, y + a - 1);
  double rhs = term(x, x + a - 1) + term(y + 1, y + a);
  return lhs - rhs >= -1e-12 * std::max(1.0, std::abs(lhs));
}

}  // namespace sombor
