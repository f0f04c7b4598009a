#pragma once

// Zeta functions attached to a counting polynomial P = sum_k a_k L^k:
//
//   F1-zeta          prod_k (t - k)^{-a_k}
//   local factor     prod_k (1 - p^k T)^{-a_k},  T = p^{-s}
//   arithmetic zeta  prod_k zeta(s - k)^{a_k}    (rendered symbolically)

#include "f1/loose_graph.hpp"
#include "f1/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace f1 {

/// Truncated power series in T with exact rational coefficients c_0..c_M.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1) {}
  explicit PowerSeries(std::vector<Rational> coefficients);

  static PowerSeries one(std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return c_.at(k); }
  Rational& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<Rational>& coefficients() const { return c_; }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// exp of a series with zero constant term.
  PowerSeries exp() const;
  /// log of a series with constant term 1.
  PowerSeries log() const;

 private:
  std::vector<Rational> c_;
};

/// Exponent map k -> a_k (nonzero) of prod_k (t - k)^{-a_k}.
class ZetaF1 {
 public:
  using Exponents = std::map<unsigned, Integer>;

  ZetaF1() = default;
  explicit ZetaF1(Exponents exponents);

  static ZetaF1 from_polynomial(const LPolynomial& p);

  const Exponents& exponents() const { return exponents_; }
  Integer exponent(unsigned k) const;
  LPolynomial to_polynomial() const;
  /// sum_k a_k, the number of points "over F1".
  Integer euler_characteristic() const;

  /// prod (t - k)^{-a_k} in double precision.
  double value(double t) const;

  /// e.g. "1/(t(t−1)(t−2))"; "(t−1)^2/t^3" for zeros over poles.
  std::string render(bool unicode = true) const;

  friend bool operator==(const ZetaF1&, const ZetaF1&) = default;

 private:
  Exponents exponents_;
};

ZetaF1 zeta_from_polynomial(const LPolynomial& p);
Integer euler_characteristic(const LPolynomial& p);

/// prod_k (1 - prime^k T)^{-a_k} up to T^order.
PowerSeries local_zeta_series(const LPolynomial& p, long prime, std::size_t order);

/// exp(sum_{m=1}^{order} P(prime^m) T^m / m).
PowerSeries counting_series(const LPolynomial& p, long prime, std::size_t order);

/// Symbolic prod_k zeta(s-k)^{a_k}; zeros of the exponent map go below the
/// fraction bar. ASCII mode writes "zeta(" and '-'.
std::string render_arithmetic_zeta(const LPolynomial& p, bool unicode = true);

/// zeta_{X|F_p}(s) * (p-1)^{#X(F1)} for real p > 1. Tends to the F1-zeta
/// value at s as p -> 1 with error O(p - 1). Throws std::domain_error when s
/// hits a root of the exponent map or p <= 1.
double limit_check(const ZetaF1& z, double s, double p);

/// Closed form (t-1)^I t^{-(E+I)} prod_k (t-k)^{-n_k} for a loose tree; free
/// loose edges contribute (t-1)/t each and a lone vertex gives 1/t.
ZetaF1 tree_zeta(const TreeStats& stats);

}  // namespace f1
