#pragma once

// Finitely presented pointed commutative monoids (the affine layer of
// Deitmar's F1-geometry): prime spectra, localization at a prime, and
// F_q-points counted as monoid morphisms into (F_q, *).

#include "f1/loose_graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace f1::monoid {

class MonoidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The bounded congruence search would exceed its size budget.
class BoundExceeded : public MonoidError {
 public:
  using MonoidError::MonoidError;
};

using Exponents = std::vector<unsigned>;

/// Either the absorbing 0 or a monomial; the empty monomial is 1.
struct Element {
  bool zero = false;
  Exponents exponents;

  static Element zero_element() { return {true, {}}; }
  static Element one(std::size_t generators) { return {false, Exponents(generators, 0)}; }
  bool is_one() const;
  friend bool operator==(const Element&, const Element&) = default;
};

struct Relation {
  Element lhs;
  Element rhs;
};

struct MonoidPresentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;

  std::size_t rank() const { return generators.size(); }
  /// Free pointed monoid F1[x1..xn].
  static MonoidPresentation free(std::vector<std::string> generators);
};

/// The ideal {0} u <S>; `generators` holds sorted generator indices. spec()
/// lists each ideal once, under the set of all generators it contains.
struct PrimeIdeal {
  std::vector<std::size_t> generators;
  friend auto operator<=>(const PrimeIdeal&, const PrimeIdeal&) = default;
};

/// Parses "gens x y; rel x*y = 1; rel x^2 = 0;".
MonoidPresentation parse_presentation(std::string_view text);
std::string render_presentation(const MonoidPresentation& m);
std::string render_element(const MonoidPresentation& m, const Element& e);
/// "{0}" or "(x, y)".
std::string render_prime(const MonoidPresentation& m, const PrimeIdeal& p);

/// Congruence classes of all monomials with every exponent <= bound, plus 0,
/// obtained by applying the relations in both directions inside that box.
class BoundedCongruence {
 public:
  BoundedCongruence(const MonoidPresentation& m, unsigned bound);

  unsigned bound() const { return bound_; }
  std::size_t box_size() const { return box_size_; }
  bool in_box(const Exponents& e) const;
  bool equivalent(const Element& a, const Element& b) const;
  bool is_zero(const Exponents& e) const;
  /// Generator g is a unit when some multiple of g is congruent to 1.
  bool is_unit_generator(std::size_t g) const;
  /// Membership of a monomial's class in {0} u <S>.
  bool in_ideal(const PrimeIdeal& p, const Exponents& e) const;
  /// 1 outside the ideal and the complement closed under multiplication
  /// (checked inside the box).
  bool is_prime(const PrimeIdeal& p) const;

 private:
  std::size_t encode(const Exponents& e) const;
  Exponents decode(std::size_t code) const;
  std::size_t find(std::size_t x) const;
  void unite(std::size_t a, std::size_t b);
  std::size_t class_of(const Element& e) const;

  std::size_t rank_;
  unsigned bound_;
  std::size_t box_size_;
  std::size_t zero_code_;
  mutable std::vector<std::size_t> parent_;
};

inline constexpr unsigned kDefaultBound = 8;

std::vector<PrimeIdeal> spec(const MonoidPresentation& m, unsigned bound = kDefaultBound);
/// M \ M^x: the prime generated by all non-unit generators.
PrimeIdeal maximal_ideal(const MonoidPresentation& m, unsigned bound = kDefaultBound);
/// Adjoins g^-1 with g * g^-1 = 1 for each generator outside p.
MonoidPresentation localize(const MonoidPresentation& m, const PrimeIdeal& p, unsigned bound = kDefaultBound);

/// Number of monoid morphisms m -> (F_q, *) with 0 -> 0 and 1 -> 1, for q a
/// prime power <= 9 and at most 6 generators.
std::uint64_t hom_count(const MonoidPresentation& m, unsigned q);

/// Same count with F_q* modelled as a cyclic group of order q-1 also for
/// prime q; used to cross-check the modular-arithmetic model.
std::uint64_t hom_count_cyclic_model(const MonoidPresentation& m, unsigned q);

/// Free monoid on one generator per edge incident to v: the local chart of
/// the cone at v.
MonoidPresentation coordinate_monoid(const LooseGraph& g, const VertexId& v);

}  // namespace f1::monoid
