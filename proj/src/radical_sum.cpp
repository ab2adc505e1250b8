#include "sombor/radical_sum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sombor {

bool is_squarefree(std::uint64_t value) {
  if (value == 0) return false;
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    if (value % (p * p) == 0) return false;
  }
  return true;
}

std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t value) {
  std::uint64_t square = 1;
  std::uint64_t rest = value;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
  }
  return {square, rest};
}

RadicalSum RadicalSum::sqrt_of(std::uint64_t radicand, Rational coefficient) {
  RadicalSum out;
  if (radicand == 0 || coefficient.is_zero()) return out;
  auto [square, free] = split_square(radicand);
  out.add_term(free, coefficient * Rational(static_cast<std::int64_t>(square)));
  return out;
}

RadicalSum RadicalSum::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [radicand, coeff] = terms[i];
    if (!is_squarefree(radicand))
      throw std::invalid_argument("radicand " + std::to_string(radicand) + " is not squarefree");
    if (coeff.is_zero())
      throw std::invalid_argument("zero coefficient at radicand " + std::to_string(radicand));
    if (i > 0 && terms[i - 1].first == radicand)
      throw std::invalid_argument("repeated radicand " + std::to_string(radicand));
  }
  RadicalSum out;
  out.terms_ = std::move(terms);
  return out;
}

Rational RadicalSum::coefficient(std::uint64_t radicand) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                             [](const Term& t, std::uint64_t r) { return t.first < r; });
  if (it == terms_.end() || it->first != radicand) return Rational(0);
  return it->second;
}

void RadicalSum::add_term(std::uint64_t squarefree, const Rational& coefficient) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), squarefree,
                             [](const Term& t, std::uint64_t r) { return t.first < r; });
  if (it != terms_.end() && it->first == squarefree) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (!coefficient.is_zero()) {
    terms_.insert(it, {squarefree, coefficient});
  }
}

double RadicalSum::value() const {
  double total = 0.0;
  for (const auto& [r, c] : terms_) total += c.to_double() * std::sqrt(static_cast<double>(r));
  return total;
}

long double RadicalSum::value_long() const {
  long double total = 0.0L;
  for (const auto& [r, c] : terms_)
    total += c.to_long_double() * std::sqrt(static_cast<long double>(r));
  return total;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& rhs) {
  for (const auto& [r, c] : rhs.terms_) add_term(r, c);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& rhs) {
  for (const auto& [r, c] : rhs.terms_) add_term(r, -c);
  return *this;
}

RadicalSum& RadicalSum::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= scale;
  return *this;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

std::string RadicalSum::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << ", ";
    os << terms_[i].first << ':' << terms_[i].second.to_string();
  }
  os << '}';
  return os.str();
}

RadicalSum RadicalSum::parse(const std::string& text) {
  auto fail = [&] { throw std::invalid_argument("malformed radical sum: '" + text + "'"); };
  std::string body;
  for (char ch : text)
    if (ch != ' ') body.push_back(ch);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') fail();
  body = body.substr(1, body.size() - 2);
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    std::string item = body.substr(pos, comma - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos || colon == 0) fail();
    std::uint64_t radicand = 0;
    try {
      std::size_t used = 0;
      radicand = std::stoull(item.substr(0, colon), &used);
      if (used != colon) fail();
    } catch (const std::logic_error&) {
      fail();
    }
    terms.emplace_back(radicand, Rational::parse(item.substr(colon + 1)));
    pos = comma + 1;
  }
  return from_terms(std::move(terms));
}

namespace {

template <class Float>
Float evaluate_as(const RadicalSum& s) {
  Float total = 0;
  for (const auto& [r, c] : s.terms()) {
    Float root = sqrt(Float(r));
    total += Float(c.num()) * root / Float(c.den());
  }
  return total;
}

}  // namespace

std::strong_ordering compare(const RadicalSum& a, const RadicalSum& b) {
  if (a == b) return std::strong_ordering::equal;
  RadicalSum diff = a - b;

  double scale = 1.0;
  for (const auto& [r, c] : diff.terms())
    scale = std::max(scale, std::abs(c.to_double()) * std::sqrt(static_cast<double>(r)));

  double d = diff.value();
  if (std::abs(d) > 1e-9 * scale) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;

  using boost::multiprecision::cpp_bin_float_quad;
  cpp_bin_float_quad q = evaluate_as<cpp_bin_float_quad>(diff);
  if (abs(q) > cpp_bin_float_quad(1e-28) * scale)
    return q > 0 ? std::strong_ordering::greater : std::strong_ordering::less;

  using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;
  Wide w = evaluate_as<Wide>(diff);
  if (abs(w) > Wide(1e-90) * scale) return w > 0 ? std::strong_ordering::greater : std::strong_ordering::less;

  throw std::runtime_error("radical sums " + a.to_string() + " and " + b.to_string() +
                           " differ below 100-digit resolution");
}

bool so_equal(const std::vector<RadicalSum::Term>& a, const std::vector<RadicalSum::Term>& b) {
  return RadicalSum::from_terms(a) == RadicalSum::from_terms(b);
}

}  // namespace sombor
