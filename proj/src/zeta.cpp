#include "f1/zeta.hpp"

#include <cmath>
#include <stdexcept>

namespace f1 {

// ---------------------------------------------------------------------------
// PowerSeries

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) c_.emplace_back(0);
}

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  s.c_[0] = 1;
  return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= r.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

// n f_n = sum_{k=1}^n k g_k f_{n-k}  for f = exp(g).
PowerSeries PowerSeries::exp() const {
  if (c_[0] != 0) throw std::domain_error("exp needs a series without constant term");
  PowerSeries f(order());
  f.c_[0] = 1;
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<long long>(k)) * c_[k] * f.c_[n - k];
    f.c_[n] = acc / Rational(static_cast<long long>(n));
  }
  return f;
}

// n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}  for g = log(f), f_0 = 1.
PowerSeries PowerSeries::log() const {
  if (c_[0] != 1) throw std::domain_error("log needs a series with constant term 1");
  PowerSeries g(order());
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc = Rational(static_cast<long long>(n)) * c_[n];
    for (std::size_t k = 1; k < n; ++k) acc -= Rational(static_cast<long long>(k)) * g.c_[k] * c_[n - k];
    g.c_[n] = acc / Rational(static_cast<long long>(n));
  }
  return g;
}

// ---------------------------------------------------------------------------
// ZetaF1

ZetaF1::ZetaF1(Exponents exponents) {
  for (auto& [k, a] : exponents)
    if (a != 0) exponents_.emplace(k, std::move(a));
}

ZetaF1 ZetaF1::from_polynomial(const LPolynomial& p) { return ZetaF1(p.terms()); }

Integer ZetaF1::exponent(unsigned k) const {
  auto it = exponents_.find(k);
  return it == exponents_.end() ? Integer(0) : it->second;
}

LPolynomial ZetaF1::to_polynomial() const {
  LPolynomial p;
  for (const auto& [k, a] : exponents_) p += LPolynomial::monomial(a, k);
  return p;
}

Integer ZetaF1::euler_characteristic() const {
  Integer s = 0;
  for (const auto& [k, a] : exponents_) s += a;
  return s;
}

double ZetaF1::value(double t) const {
  double v = 1.0;
  for (const auto& [k, a] : exponents_) v *= std::pow(t - static_cast<double>(k), -a.convert_to<double>());
  return v;
}

namespace {

std::string power_suffix(const Integer& e) { return e == 1 ? "" : "^" + e.str(); }

// Joins factors and wraps a multi-factor denominator in parentheses.
std::string fraction(const std::vector<std::string>& num, const std::vector<std::string>& den) {
  std::string top;
  for (const auto& f : num) top += f;
  if (top.empty()) top = "1";
  if (den.empty()) return top;
  std::string bottom;
  for (const auto& f : den) bottom += f;
  if (den.size() > 1) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

}  // namespace

std::string ZetaF1::render(bool unicode) const {
  const std::string minus = unicode ? "−" : "-";
  std::vector<std::string> num, den;
  for (const auto& [k, a] : exponents_) {
    std::string base = k == 0 ? "t" : "(t" + minus + std::to_string(k) + ")";
    if (a < 0)
      num.push_back(base + power_suffix(-a));
    else
      den.push_back(base + power_suffix(a));
  }
  return fraction(num, den);
}

ZetaF1 zeta_from_polynomial(const LPolynomial& p) { return ZetaF1::from_polynomial(p); }

Integer euler_characteristic(const LPolynomial& p) { return p.coefficient_sum(); }

// ---------------------------------------------------------------------------
// Local and counting series

PowerSeries local_zeta_series(const LPolynomial& p, long prime, std::size_t order) {
  if (prime < 2) throw std::invalid_argument("prime must be at least 2");
  PowerSeries result = PowerSeries::one(order);
  for (const auto& [k, a] : p.terms()) {
    const Integer base = boost::multiprecision::pow(Integer(prime), k);
    PowerSeries factor(order);
    if (a > 0) {
      // (1 - cT)^{-1} = sum_j c^j T^j
      Integer c = 1;
      for (std::size_t j = 0; j <= order; ++j, c *= base) factor[j] = Rational(c);
    } else {
      factor[0] = 1;
      if (order >= 1) factor[1] = Rational(-base);
    }
    const Integer reps = a > 0 ? a : Integer(-a);
    for (Integer i = 0; i < reps; ++i) result = result * factor;
  }
  return result;
}

PowerSeries counting_series(const LPolynomial& p, long prime, std::size_t order) {
  if (prime < 2) throw std::invalid_argument("prime must be at least 2");
  PowerSeries log_series(order);
  Integer q = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    q *= prime;
    log_series[m] = Rational(p.eval(q)) / Rational(static_cast<long long>(m));
  }
  return log_series.exp();
}

std::string render_arithmetic_zeta(const LPolynomial& p, bool unicode) {
  const std::string zeta = unicode ? "ζ(" : "zeta(";
  const std::string minus = unicode ? "−" : "-";
  std::vector<std::string> num, den;
  for (const auto& [k, a] : p.terms()) {
    std::string base = zeta + "s" + (k == 0 ? "" : minus + std::to_string(k)) + ")";
    if (a > 0)
      num.push_back(base + power_suffix(a));
    else
      den.push_back(base + power_suffix(-a));
  }
  return fraction(num, den);
}

double limit_check(const ZetaF1& z, double s, double p) {
  if (!(p > 1.0)) throw std::domain_error("limit_check needs p > 1");
  const double log_p = std::log1p(p - 1.0);
  double v = 1.0;
  for (const auto& [k, a] : z.exponents()) {
    const double gap = s - static_cast<double>(k);
    if (std::abs(gap) < 1e-12) throw std::domain_error("s coincides with a root of the zeta exponent map");
    // Each factor ((p-1)/(1-p^{k-s}))^{a_k} tends to (s-k)^{-a_k}; grouping
    // the (p-1) powers this way avoids cancellation near p = 1.
    const double one_minus = -std::expm1(-gap * log_p);
    v *= std::pow((p - 1.0) / one_minus, a.convert_to<double>());
  }
  return v;
}

ZetaF1 tree_zeta(const TreeStats& st) {
  ZetaF1::Exponents e;
  const bool lone_vertex = st.isolated == 1 && st.degrees.empty() && st.ends == 0;
  if (lone_vertex) {
    e[0] += 1;
  } else if (st.isolated == 0) {
    const Integer internal(st.internal);
    e[1] -= internal;
    e[0] += Integer(st.ends) + internal;
    for (std::size_t i = 0; i < st.degrees.size(); ++i) e[static_cast<unsigned>(st.degrees[i])] += Integer(st.counts[i]);
  }
  e[1] += Integer(st.free_edges);
  e[0] -= Integer(st.free_edges);
  return ZetaF1(std::move(e));
}

}  // namespace f1
