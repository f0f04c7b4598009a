#include "f1/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace f1::monoid {

namespace {

constexpr std::size_t kMaxBox = 4'000'000;

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool valid_generator_name(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Element parse_element(const std::vector<std::string>& gens, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw MonoidError("empty monoid element");
  if (s == "0") return Element::zero_element();
  Element e = Element::one(gens.size());
  if (s == "1") return e;
  std::stringstream in(s);
  for (std::string factor; std::getline(in, factor, '*');) {
    std::string name = factor;
    unsigned power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      const std::string digits = factor.substr(caret + 1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw MonoidError("bad exponent in '" + factor + "'");
      power = static_cast<unsigned>(std::stoul(digits));
    }
    if (name == "1") continue;
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end()) throw MonoidError("unknown generator '" + name + "'");
    e.exponents[static_cast<std::size_t>(it - gens.begin())] += power;
  }
  return e;
}

// Multiplicative monoid of F_q as a lookup table; index 0 is zero.
struct FieldMonoid {
  unsigned size;
  unsigned one;
  std::vector<std::vector<unsigned>> mul;

  unsigned power(unsigned a, unsigned e) const {
    unsigned r = one;
    for (unsigned i = 0; i < e; ++i) r = mul[r][a];
    return r;
  }
};

bool is_prime_number(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(unsigned n) {
  if (n < 2) return false;
  unsigned p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

FieldMonoid modular_model(unsigned q) {
  FieldMonoid f{q, 1, std::vector<std::vector<unsigned>>(q, std::vector<unsigned>(q))};
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) f.mul[a][b] = (a * b) % q;
  return f;
}

// {0} u <alpha>, alpha of order q-1; index i >= 1 stands for alpha^{i-1}.
FieldMonoid cyclic_model(unsigned q) {
  FieldMonoid f{q, 1, std::vector<std::vector<unsigned>>(q, std::vector<unsigned>(q, 0))};
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b) f.mul[a][b] = 1 + ((a - 1) + (b - 1)) % (q - 1);
  return f;
}

std::uint64_t count_homs(const MonoidPresentation& m, const FieldMonoid& f) {
  const std::size_t n = m.rank();
  std::vector<unsigned> assign(n, 0);
  auto value = [&](const Element& e) {
    if (e.zero) return 0U;
    unsigned r = f.one;
    for (std::size_t g = 0; g < n; ++g)
      if (e.exponents[g] != 0) r = f.mul[r][f.power(assign[g], e.exponents[g])];
    return r;
  };
  std::uint64_t count = 0;
  while (true) {
    bool ok = std::all_of(m.relations.begin(), m.relations.end(),
                          [&](const Relation& r) { return value(r.lhs) == value(r.rhs); });
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++assign[i] == f.size) assign[i++] = 0;
    if (i == n) break;
  }
  return count;
}

void check_hom_limits(const MonoidPresentation& m, unsigned q) {
  if (q > 9 || !is_prime_power(q)) throw MonoidError("q must be a prime power <= 9");
  if (m.rank() > 6) throw MonoidError("hom counting supports at most 6 generators");
}

}  // namespace

bool Element::is_one() const {
  return !zero && std::all_of(exponents.begin(), exponents.end(), [](unsigned e) { return e == 0; });
}

MonoidPresentation MonoidPresentation::free(std::vector<std::string> generators) {
  return {std::move(generators), {}};
}

// ---------------------------------------------------------------------------
// Text format

MonoidPresentation parse_presentation(std::string_view text) {
  MonoidPresentation m;
  bool have_gens = false;
  std::stringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw, ';');) {
    const std::string stmt = trim(raw);
    if (stmt.empty()) continue;
    std::size_t split = 0;
    while (split < stmt.size() && !std::isspace(static_cast<unsigned char>(stmt[split]))) ++split;
    const std::string keyword = stmt.substr(0, split);
    const std::string rest = stmt.substr(split);
    if (keyword == "gens") {
      if (have_gens) throw MonoidError("duplicate 'gens' statement");
      have_gens = true;
      std::string names = rest;
      std::replace(names.begin(), names.end(), ',', ' ');
      std::istringstream ns(names);
      for (std::string name; ns >> name;) {
        if (!valid_generator_name(name)) throw MonoidError("invalid generator name '" + name + "'");
        if (std::find(m.generators.begin(), m.generators.end(), name) != m.generators.end())
          throw MonoidError("duplicate generator '" + name + "'");
        m.generators.push_back(name);
      }
    } else if (keyword == "rel") {
      if (!have_gens) throw MonoidError("'rel' before 'gens'");
      const auto eq = rest.find('=');
      if (eq == std::string::npos || rest.find('=', eq + 1) != std::string::npos)
        throw MonoidError("relation needs exactly one '='");
      m.relations.push_back({parse_element(m.generators, rest.substr(0, eq)),
                             parse_element(m.generators, rest.substr(eq + 1))});
    } else {
      throw MonoidError("unknown statement '" + keyword + "'");
    }
  }
  return m;
}

std::string render_element(const MonoidPresentation& m, const Element& e) {
  if (e.zero) return "0";
  std::string out;
  for (std::size_t g = 0; g < m.rank(); ++g) {
    if (e.exponents[g] == 0) continue;
    if (!out.empty()) out += '*';
    out += m.generators[g];
    if (e.exponents[g] > 1) out += "^" + std::to_string(e.exponents[g]);
  }
  return out.empty() ? "1" : out;
}

std::string render_presentation(const MonoidPresentation& m) {
  std::string out = "gens";
  for (const auto& g : m.generators) out += " " + g;
  out += ";";
  for (const auto& r : m.relations) out += " rel " + render_element(m, r.lhs) + " = " + render_element(m, r.rhs) + ";";
  return out;
}

std::string render_prime(const MonoidPresentation& m, const PrimeIdeal& p) {
  if (p.generators.empty()) return "{0}";
  std::string out = "(";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += m.generators.at(p.generators[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// BoundedCongruence

BoundedCongruence::BoundedCongruence(const MonoidPresentation& m, unsigned bound)
    : rank_(m.rank()), bound_(bound), box_size_(1) {
  for (std::size_t i = 0; i < rank_; ++i) {
    box_size_ *= static_cast<std::size_t>(bound_) + 1;
    if (box_size_ > kMaxBox)
      throw BoundExceeded("congruence search box (" + std::to_string(bound_ + 1) + "^" + std::to_string(rank_) +
                          ") exceeds the size budget");
  }
  zero_code_ = box_size_;
  parent_.resize(box_size_ + 1);
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});

  for (const auto& rel : m.relations) {
    if (!rel.lhs.zero && !in_box(rel.lhs.exponents)) continue;
    if (!rel.rhs.zero && !in_box(rel.rhs.exponents)) continue;
    if (rel.lhs.zero && rel.rhs.zero) continue;
    if (rel.lhs.zero || rel.rhs.zero) {
      const Exponents& mono = rel.lhs.zero ? rel.rhs.exponents : rel.lhs.exponents;
      for (std::size_t code = 0; code < box_size_; ++code) {
        Exponents w = decode(code);
        bool divisible = true;
        for (std::size_t g = 0; g < rank_; ++g) divisible = divisible && w[g] >= mono[g];
        if (divisible) unite(code, zero_code_);
      }
      continue;
    }
    const Exponents& a = rel.lhs.exponents;
    const Exponents& b = rel.rhs.exponents;
    for (std::size_t code = 0; code < box_size_; ++code) {
      Exponents w = decode(code);
      bool ok = true;
      for (std::size_t g = 0; g < rank_ && ok; ++g) {
        if (w[g] < a[g]) {
          ok = false;
          break;
        }
        w[g] = w[g] - a[g] + b[g];
        ok = w[g] <= bound_;
      }
      if (ok) unite(code, encode(w));
    }
  }
}

bool BoundedCongruence::in_box(const Exponents& e) const {
  return e.size() == rank_ && std::all_of(e.begin(), e.end(), [&](unsigned x) { return x <= bound_; });
}

std::size_t BoundedCongruence::encode(const Exponents& e) const {
  std::size_t code = 0;
  for (std::size_t g = rank_; g-- > 0;) code = code * (bound_ + 1) + e[g];
  return code;
}

Exponents BoundedCongruence::decode(std::size_t code) const {
  Exponents e(rank_);
  for (std::size_t g = 0; g < rank_; ++g) {
    e[g] = static_cast<unsigned>(code % (bound_ + 1));
    code /= bound_ + 1;
  }
  return e;
}

std::size_t BoundedCongruence::find(std::size_t x) const {
  while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
  return x;
}

void BoundedCongruence::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a != b) parent_[std::min(a, b)] = std::max(a, b);
}

std::size_t BoundedCongruence::class_of(const Element& e) const {
  if (e.zero) return find(zero_code_);
  if (!in_box(e.exponents)) throw BoundExceeded("monomial lies outside the search box");
  return find(encode(e.exponents));
}

bool BoundedCongruence::equivalent(const Element& a, const Element& b) const { return class_of(a) == class_of(b); }

bool BoundedCongruence::is_zero(const Exponents& e) const { return class_of({false, e}) == find(zero_code_); }

bool BoundedCongruence::is_unit_generator(std::size_t g) const {
  const std::size_t one = find(0);
  for (std::size_t code = 0; code < box_size_; ++code)
    if (find(code) == one && decode(code)[g] > 0) return true;
  return false;
}

bool BoundedCongruence::in_ideal(const PrimeIdeal& p, const Exponents& e) const {
  const std::size_t target = class_of({false, e});
  if (target == find(zero_code_)) return true;
  for (std::size_t code = 0; code < box_size_; ++code) {
    if (find(code) != target) continue;
    const Exponents w = decode(code);
    for (std::size_t s : p.generators)
      if (w[s] > 0) return true;
  }
  return false;
}

bool BoundedCongruence::is_prime(const PrimeIdeal& p) const {
  // Mark the classes meeting the ideal once, then test closure of the
  // complement under multiplication by complement generators.
  std::vector<bool> marked(box_size_ + 1, false);
  marked[find(zero_code_)] = true;
  for (std::size_t code = 0; code < box_size_; ++code) {
    const Exponents w = decode(code);
    for (std::size_t s : p.generators)
      if (w[s] > 0) marked[find(code)] = true;
  }
  auto in_p = [&](std::size_t code) { return marked[find(code)]; };
  if (in_p(0)) return false;

  std::vector<std::size_t> outside_gens;
  for (std::size_t g = 0; g < rank_; ++g) {
    if (bound_ == 0) break;
    Exponents eg(rank_, 0);
    eg[g] = 1;
    if (!in_p(encode(eg))) outside_gens.push_back(g);
  }
  for (std::size_t code = 0; code < box_size_; ++code) {
    if (in_p(code)) continue;
    Exponents w = decode(code);
    for (std::size_t g : outside_gens) {
      if (w[g] == bound_) continue;
      ++w[g];
      const bool bad = in_p(encode(w));
      --w[g];
      if (bad) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Spectrum and localization

std::vector<PrimeIdeal> spec(const MonoidPresentation& m, unsigned bound) {
  if (m.rank() > 20) throw BoundExceeded("too many generators for subset enumeration");
  const BoundedCongruence cong(m, bound);
  std::vector<bool> unit(m.rank());
  for (std::size_t g = 0; g < m.rank(); ++g) unit[g] = cong.is_unit_generator(g);

  std::vector<PrimeIdeal> out;
  for (std::uint32_t mask = 0; mask < (1U << m.rank()); ++mask) {
    PrimeIdeal p;
    bool has_unit = false;
    for (std::size_t g = 0; g < m.rank(); ++g) {
      if (!(mask >> g & 1U)) continue;
      p.generators.push_back(g);
      has_unit = has_unit || unit[g];
    }
    if (has_unit || !cong.is_prime(p)) continue;
    // Different generator sets can span the same ideal; keep the saturated one.
    bool saturated = true;
    for (std::size_t g = 0; g < m.rank() && saturated; ++g) {
      if (mask >> g & 1U) continue;
      Exponents e(m.rank(), 0);
      e[g] = 1;
      saturated = !cong.in_ideal(p, e);
    }
    if (saturated) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.generators.size() != b.generators.size()) return a.generators.size() < b.generators.size();
    return a.generators < b.generators;
  });
  return out;
}

PrimeIdeal maximal_ideal(const MonoidPresentation& m, unsigned bound) {
  const BoundedCongruence cong(m, bound);
  PrimeIdeal p;
  for (std::size_t g = 0; g < m.rank(); ++g)
    if (!cong.is_unit_generator(g)) p.generators.push_back(g);
  if (!cong.is_prime(p)) throw MonoidError("non-units do not form a prime ideal within the search bound");
  return p;
}

MonoidPresentation localize(const MonoidPresentation& m, const PrimeIdeal& p, unsigned bound) {
  const auto primes = spec(m, bound);
  if (std::find(primes.begin(), primes.end(), p) == primes.end())
    throw MonoidError("not a prime of this monoid: " + render_prime(m, p));

  MonoidPresentation out = m;
  std::vector<std::size_t> inverted;
  for (std::size_t g = 0; g < m.rank(); ++g)
    if (!std::binary_search(p.generators.begin(), p.generators.end(), g)) inverted.push_back(g);
  for (std::size_t g : inverted) out.generators.push_back(m.generators[g] + "_inv");
  for (auto& r : out.relations) {
    if (!r.lhs.zero) r.lhs.exponents.resize(out.rank(), 0);
    if (!r.rhs.zero) r.rhs.exponents.resize(out.rank(), 0);
  }
  for (std::size_t i = 0; i < inverted.size(); ++i) {
    Element unit = Element::one(out.rank());
    unit.exponents[inverted[i]] = 1;
    unit.exponents[m.rank() + i] = 1;
    out.relations.push_back({unit, Element::one(out.rank())});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Points over finite fields

std::uint64_t hom_count(const MonoidPresentation& m, unsigned q) {
  check_hom_limits(m, q);
  return count_homs(m, is_prime_number(q) ? modular_model(q) : cyclic_model(q));
}

std::uint64_t hom_count_cyclic_model(const MonoidPresentation& m, unsigned q) {
  check_hom_limits(m, q);
  return count_homs(m, cyclic_model(q));
}

MonoidPresentation coordinate_monoid(const LooseGraph& g, const VertexId& v) {
  if (!g.has_vertex(v)) throw GraphError("unknown vertex " + v);
  std::vector<std::string> gens;
  for (const auto& e : g.edges())
    if (e.touches(v)) gens.push_back(e.tag);
  return MonoidPresentation::free(std::move(gens));
}

}  // namespace f1::monoid
