#pragma once

// Univariate integer polynomials with exact big-integer coefficients.
//
// The same representation serves two roles: classes in Z[L] inside the
// Grothendieck ring (LPolynomial) and q-analogs in Z[q] (QPolynomial). The
// indeterminate is carried as a tag type so the two never mix by accident.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace f1 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

struct LefschetzTag {
  static constexpr std::string_view symbol = "L";
};

struct QTag {
  static constexpr std::string_view symbol = "q";
};

template <typename Tag>
class BasicPolynomial {
 public:
  using Terms = std::map<unsigned, Integer>;

  BasicPolynomial() = default;
  BasicPolynomial(Integer constant) { set(0, std::move(constant)); }  // NOLINT
  BasicPolynomial(int constant) : BasicPolynomial(Integer(constant)) {}  // NOLINT

  /// coefficient * X^degree
  static BasicPolynomial monomial(Integer coefficient, unsigned degree) {
    BasicPolynomial p;
    p.set(degree, std::move(coefficient));
    return p;
  }

  /// The indeterminate itself.
  static BasicPolynomial variable() { return monomial(1, 1); }

  /// Coefficients listed from degree 0 upward.
  static BasicPolynomial from_ascending(std::span<const Integer> coefficients) {
    BasicPolynomial p;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
      p.set(static_cast<unsigned>(k), coefficients[k]);
    return p;
  }

  static BasicPolynomial from_ascending(std::initializer_list<long long> coefficients) {
    BasicPolynomial p;
    unsigned k = 0;
    for (long long c : coefficients) p.set(k++, Integer(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    return terms_.empty() ? kZeroDegree : static_cast<int>(terms_.rbegin()->first);
  }

  Integer coefficient(unsigned k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Integer leading_coefficient() const {
    return terms_.empty() ? Integer(0) : terms_.rbegin()->second;
  }

  /// Nonzero terms only.
  const Terms& terms() const { return terms_; }

  /// Dense coefficient list c_0..c_deg; empty for the zero polynomial.
  std::vector<Integer> ascending() const {
    std::vector<Integer> out;
    if (terms_.empty()) return out;
    out.resize(static_cast<std::size_t>(degree()) + 1);
    for (const auto& [k, c] : terms_) out[k] = c;
    return out;
  }

  Integer eval(const Integer& x) const {
    Integer acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + coefficient(static_cast<unsigned>(k));
    return acc;
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (int k = degree(); k >= 0; --k)
      acc = acc * x + Rational(coefficient(static_cast<unsigned>(k)));
    return acc;
  }

  /// Sum of coefficients, i.e. the value at 1.
  Integer coefficient_sum() const {
    Integer s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }

  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }

  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }

  friend BasicPolynomial operator-(BasicPolynomial a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    BasicPolynomial r;
    for (const auto& [i, ci] : a.terms_)
      for (const auto& [j, cj] : b.terms_) r.add(i + j, ci * cj);
    return r;
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

  BasicPolynomial pow(unsigned e) const {
    BasicPolynomial result(1);
    BasicPolynomial base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// Quotient and remainder for a divisor with leading coefficient +-1, so
  /// that division stays inside Z[X].
  std::pair<BasicPolynomial, BasicPolynomial> divmod(const BasicPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const Integer lead = divisor.leading_coefficient();
    if (lead != 1 && lead != -1)
      throw std::domain_error("polynomial division requires a unit leading coefficient");
    BasicPolynomial quotient;
    BasicPolynomial rem = *this;
    const int dd = divisor.degree();
    while (!rem.is_zero() && rem.degree() >= dd) {
      const unsigned shift = static_cast<unsigned>(rem.degree() - dd);
      BasicPolynomial term = monomial(rem.leading_coefficient() * lead, shift);
      quotient += term;
      rem -= term * divisor;
    }
    return {std::move(quotient), std::move(rem)};
  }

  /// Division that must leave no remainder.
  BasicPolynomial exact_divide(const BasicPolynomial& divisor) const {
    auto [quotient, rem] = divmod(divisor);
    if (!rem.is_zero()) throw std::logic_error("polynomial division is not exact");
    return quotient;
  }

  /// Descending-degree rendering, e.g. "2L^3+2L^2-4L+4"; "0" for zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (c < 0)
        out += '-';
      else if (!out.empty())
        out += '+';
      if (k == 0 || mag != 1) out += mag.str();
      if (k >= 1) out += Tag::symbol;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void set(unsigned k, Integer c) {
    if (c == 0)
      terms_.erase(k);
    else
      terms_[k] = std::move(c);
  }

  void add(unsigned k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

using LPolynomial = BasicPolynomial<LefschetzTag>;
using QPolynomial = BasicPolynomial<QTag>;

}  // namespace f1
