#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sombor/rational.hpp"

namespace sombor {

/// Exact value of the form sum_i c_i * sqrt(r_i), with every radicand r_i a
/// squarefree positive integer and every coefficient c_i a nonzero rational.
///
/// Square roots of distinct squarefree integers are linearly independent over
/// the rationals, so two reduced sums denote the same real number exactly when
/// their term lists coincide. Terms are kept sorted by radicand.
class RadicalSum {
 public:
  using Term = std::pair<std::uint64_t, Rational>;

  RadicalSum() = default;

  /// coefficient * sqrt(radicand), reducing the radicand to squarefree form.
  /// sqrt(0) contributes nothing.
  static RadicalSum sqrt_of(std::uint64_t radicand, Rational coefficient = 1);
  static RadicalSum rational(Rational value) { return sqrt_of(1, value); }

  /// Builds from already-reduced terms. Throws std::invalid_argument if a
  /// radicand is zero or not squarefree, a coefficient is zero, or a radicand
  /// repeats.
  static RadicalSum from_terms(std::vector<Term> terms);
  static RadicalSum from_terms(std::initializer_list<Term> terms) {
    return from_terms(std::vector<Term>(terms));
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient at a squarefree radicand (zero when absent).
  Rational coefficient(std::uint64_t radicand) const;

  double value() const;
  long double value_long() const;

  RadicalSum& operator+=(const RadicalSum& rhs);
  RadicalSum& operator-=(const RadicalSum& rhs);
  RadicalSum& operator*=(const Rational& scale);
  RadicalSum operator-() const;

  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(RadicalSum a, const Rational& s) { return a *= s; }
  friend RadicalSum operator*(const Rational& s, RadicalSum a) { return a *= s; }

  friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

  /// "{2:8, 13:2}" with rational coefficients printed as p or p/q.
  std::string to_string() const;
  /// Inverse of to_string(); validates the reduced-form invariants.
  static RadicalSum parse(const std::string& text);

 private:
  void add_term(std::uint64_t squarefree, const Rational& coefficient);

  std::vector<Term> terms_;
};

bool is_squarefree(std::uint64_t value);

/// value = square^2 * squarefree; returns {square, squarefree}.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t value);

/// Total order on real values. Exact equality is decided on the reduced term
/// lists; otherwise the sign of the difference is taken from double
/// evaluation when it clears a relative margin of 1e-9, escalating to 113-bit
/// and then 332-bit binary floating point. Throws std::runtime_error if the
/// difference is still below resolution, which does not happen for the
/// small-degree sums this library produces.
std::strong_ordering compare(const RadicalSum& a, const RadicalSum& b);

/// Equality of two reduced sums. Both inputs are checked for the reduced
/// form; a non-reduced term list is rejected with std::invalid_argument.
bool so_equal(const std::vector<RadicalSum::Term>& a, const std::vector<RadicalSum::Term>& b);
inline bool so_equal(const RadicalSum& a, const RadicalSum& b) { return a == b; }

}  // namespace sombor
