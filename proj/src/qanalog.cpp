#include "f1/qanalog.hpp"

#include <algorithm>
#include <numeric>

namespace f1::qanalog {

QPolynomial q_integer(unsigned n) {
  QPolynomial p;
  for (unsigned i = 0; i < n; ++i) p += QPolynomial::monomial(1, i);
  return p;
}

QPolynomial q_factorial(unsigned n) {
  QPolynomial p(1);
  for (unsigned i = 1; i <= n; ++i) p *= q_integer(i);
  return p;
}

QPolynomial gauss_binomial(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("gauss_binomial needs 0 <= k <= n");
  // The divisor is a product of monic polynomials, so division stays in Z[q].
  return q_factorial(n).exact_divide(q_factorial(k) * q_factorial(n - k));
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer f1_subspace_count(int n, int k) {
  if (n < -1 || k < -1 || k > n) throw std::invalid_argument("f1_subspace_count needs -1 <= k <= n");
  return binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k + 1));
}

Integer gl_order(unsigned d, unsigned n) {
  if (n == 0) throw std::invalid_argument("mu_n needs n >= 1");
  Integer r = boost::multiprecision::pow(Integer(n), d);
  for (unsigned i = 2; i <= d; ++i) r *= i;
  return r;
}

// ---------------------------------------------------------------------------
// F_{1^n}-vector spaces

F1nVectorSpace::F1nVectorSpace(std::size_t dimension, unsigned order) : d_(dimension), n_(order) {
  if (n_ == 0) throw std::invalid_argument("mu_n needs n >= 1");
}

std::vector<F1nPoint> F1nVectorSpace::points() const {
  std::vector<F1nPoint> out{F1nPoint::origin()};
  for (std::size_t j = 0; j < d_; ++j)
    for (unsigned u = 0; u < n_; ++u) out.push_back({false, j, u});
  return out;
}

bool F1nVectorSpace::contains(const F1nPoint& p) const { return p.zero || (p.orbit < d_ && p.exponent < n_); }

F1nPoint F1nVectorSpace::scale(const F1nPoint& p, unsigned times) const {
  if (!contains(p)) throw DimensionMismatch("point outside the space");
  if (p.zero) return p;
  return {false, p.orbit, static_cast<unsigned>((p.exponent + times) % n_)};
}

// Under the subgroup generated by alpha^r, the point (j, u) stays in the
// residue class u mod r and moves u / r around Z/m.
F1nPoint RestrictedSpace::map(const F1nPoint& p) const {
  if (p.zero) return p;
  return {false, p.orbit * index + p.exponent % index, p.exponent / index};
}

RestrictedSpace restrict_scalars(const F1nVectorSpace& v, unsigned m) {
  if (m == 0 || v.order() % m != 0) throw std::invalid_argument("restriction of scalars needs m | n");
  const unsigned r = v.order() / m;
  return {F1nVectorSpace(v.dimension() * r, m), r};
}

// ---------------------------------------------------------------------------
// Monomial matrices

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> sigma, std::vector<unsigned> weights, unsigned order)
    : sigma_(std::move(sigma)), weights_(std::move(weights)), n_(order) {
  if (n_ == 0) throw std::invalid_argument("mu_n needs n >= 1");
  if (sigma_.size() != weights_.size()) throw DimensionMismatch("permutation and weights differ in size");
  std::vector<bool> hit(sigma_.size(), false);
  for (std::size_t s : sigma_) {
    if (s >= sigma_.size() || hit[s]) throw std::invalid_argument("sigma is not a permutation");
    hit[s] = true;
  }
  for (auto& w : weights_) w %= n_;
}

MonomialMatrix MonomialMatrix::identity(std::size_t d, unsigned order) {
  std::vector<std::size_t> sigma(d);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  return {std::move(sigma), std::vector<unsigned>(d, 0), order};
}

std::vector<std::vector<int>> MonomialMatrix::entries() const {
  std::vector<std::vector<int>> m(size(), std::vector<int>(size(), -1));
  for (std::size_t j = 0; j < size(); ++j) m[sigma_[j]][j] = static_cast<int>(weights_[j]);
  return m;
}

MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size() || a.order() != b.order()) throw DimensionMismatch("cannot compose matrices of different shape");
  const unsigned n = a.order();
  std::vector<std::size_t> sigma(a.size());
  std::vector<unsigned> weights(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::size_t mid = b.permutation()[j];
    sigma[j] = a.permutation()[mid];
    weights[j] = (b.weights()[j] + a.weights()[mid]) % n;
  }
  return {std::move(sigma), std::move(weights), n};
}

MonomialMatrix invert(const MonomialMatrix& a) {
  const unsigned n = a.order();
  std::vector<std::size_t> sigma(a.size());
  std::vector<unsigned> weights(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::size_t image = a.permutation()[j];
    sigma[image] = j;
    weights[image] = (n - a.weights()[j]) % n;
  }
  return {std::move(sigma), std::move(weights), n};
}

F1nPoint apply(const MonomialMatrix& a, const F1nVectorSpace& space, const F1nPoint& p) {
  if (space.dimension() != a.size() || space.order() != a.order())
    throw DimensionMismatch("matrix does not act on this space");
  if (!space.contains(p)) throw DimensionMismatch("point outside the space");
  if (p.zero) return p;
  return {false, a.permutation()[p.orbit], (p.exponent + a.weights()[p.orbit]) % a.order()};
}

std::vector<MonomialMatrix> all_monomial_matrices(std::size_t d, unsigned n) {
  std::vector<MonomialMatrix> out;
  std::vector<std::size_t> sigma(d);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    std::vector<unsigned> w(d, 0);
    while (true) {
      out.emplace_back(sigma, w, n);
      std::size_t i = d;
      while (i > 0 && ++w[i - 1] == n) w[--i] = 0;
      if (i == 0) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace f1::qanalog
