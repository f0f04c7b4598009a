#pragma once

// q-analogs and linear algebra over F1 and its extensions F_{1^n}.

#include "f1/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace f1::qanalog {

/// [n]_q = 1 + q + ... + q^{n-1}
QPolynomial q_integer(unsigned n);
/// [n]_q! = [1]_q [2]_q ... [n]_q
QPolynomial q_factorial(unsigned n);
/// [n]_q! / ([k]_q! [n-k]_q!), computed by exact polynomial division.
QPolynomial gauss_binomial(unsigned n, unsigned k);

Integer binomial(unsigned n, unsigned k);

/// Number of k-dimensional subspaces of PG(n, F1), i.e. binomial(n+1, k+1);
/// k = -1 counts the empty subspace once.
Integer f1_subspace_count(int n, int k);

/// |GL_d(F_{1^n})| = |mu_n wr S_d| = n^d d!
Integer gl_order(unsigned d, unsigned n);

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of an F_{1^n}-vector space: 0, or b_j^{alpha^u}.
struct F1nPoint {
  bool zero = false;
  std::size_t orbit = 0;
  unsigned exponent = 0;

  static F1nPoint origin() { return {true, 0, 0}; }
  friend bool operator==(const F1nPoint&, const F1nPoint&) = default;
};

/// d free mu_n-orbits plus the distinguished 0.
class F1nVectorSpace {
 public:
  F1nVectorSpace(std::size_t dimension, unsigned order);

  std::size_t dimension() const { return d_; }
  unsigned order() const { return n_; }
  std::size_t nonzero_count() const { return d_ * n_; }
  /// All points, 0 first, then orbits in order.
  std::vector<F1nPoint> points() const;
  bool contains(const F1nPoint& p) const;
  /// p * alpha: the generator of mu_n acting on p.
  F1nPoint scale(const F1nPoint& p, unsigned times = 1) const;

 private:
  std::size_t d_;
  unsigned n_;
};

/// Restriction of scalars from F_{1^n} to F_{1^m}, m | n, n = m r.
struct RestrictedSpace {
  F1nVectorSpace space;
  unsigned index;  // r

  /// Where a point of the original space lands.
  F1nPoint map(const F1nPoint& p) const;
};

RestrictedSpace restrict_scalars(const F1nVectorSpace& v, unsigned m);

/// d x d monomial matrix over mu_n: column j holds alpha^{weights[j]} in row
/// sigma[j], so b_j maps to b_{sigma(j)}^{alpha^{weights[j]}}.
class MonomialMatrix {
 public:
  MonomialMatrix(std::vector<std::size_t> sigma, std::vector<unsigned> weights, unsigned order);

  static MonomialMatrix identity(std::size_t d, unsigned order);

  std::size_t size() const { return sigma_.size(); }
  unsigned order() const { return n_; }
  const std::vector<std::size_t>& permutation() const { return sigma_; }
  const std::vector<unsigned>& weights() const { return weights_; }

  /// Dense form with -1 for zero entries and the mu_n exponent otherwise.
  std::vector<std::vector<int>> entries() const;

  friend auto operator<=>(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<std::size_t> sigma_;
  std::vector<unsigned> weights_;
  unsigned n_;
};

/// a o b (apply b first).
MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix invert(const MonomialMatrix& a);
F1nPoint apply(const MonomialMatrix& a, const F1nVectorSpace& space, const F1nPoint& p);

/// Every element of GL_d(F_{1^n}), in lexicographic order of (sigma, weights).
std::vector<MonomialMatrix> all_monomial_matrices(std::size_t d, unsigned n);

}  // namespace f1::qanalog
