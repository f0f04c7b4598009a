#include "f1/oracle.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <thread>

namespace f1::oracle {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

struct ConeMasks {
  std::size_t width = 0;
  std::vector<std::uint32_t> cone;  // closed neighborhood mask per original vertex
};

ConeMasks cone_masks(const LooseGraph& g) {
  const AmbientEmbedding amb = ambient_completion(g);
  const std::set<std::size_t> skip(amb.free_edge_vertices.begin(), amb.free_edge_vertices.end());
  std::vector<std::size_t> coord(amb.size(), SIZE_MAX);
  ConeMasks out;
  for (std::size_t i = 0; i < amb.size(); ++i)
    if (!skip.count(i)) coord[i] = out.width++;
  const auto nbhd = amb.closed_neighborhoods();
  for (std::size_t v = 0; v < amb.original_count; ++v) {
    std::uint32_t mask = 0;
    for (std::size_t w : nbhd[v]) mask |= 1U << coord[w];
    out.cone.push_back(mask);
  }
  return out;
}

// Counts canonical points with global index in [begin, end). Points are
// ordered by the position of the leading 1, then by the tail in base q.
std::uint64_t count_range(const ConeMasks& cm, std::uint64_t q, std::uint64_t begin, std::uint64_t end) {
  const std::size_t n = cm.width;
  std::uint64_t count = 0;
  std::uint64_t offset = 0;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail_len = n - 1 - lead;
    const std::uint64_t block = ipow(q, tail_len);
    const std::uint64_t lo = std::max(begin, offset);
    const std::uint64_t hi = std::min(end, offset + block);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t t = idx - offset;
      std::uint32_t support = 1U << lead;
      for (std::size_t k = 0; k < tail_len; ++k, t /= q)
        if (t % q != 0) support |= 1U << (lead + 1 + k);
      for (std::size_t v = 0; v < cm.cone.size(); ++v) {
        if ((support >> v & 1U) && (support & ~cm.cone[v]) == 0) {
          ++count;
          break;
        }
      }
    }
    offset += block;
  }
  return count;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; out.size() < count; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

std::size_t enumeration_width(const LooseGraph& g) {
  return g.vertices().size() + g.loose_edge_count();
}

std::uint64_t enumerate_points(const LooseGraph& g, std::uint64_t q, const Limits& limits, unsigned shards) {
  if (!is_prime(q)) throw LimitExceeded("oracle counts over prime fields only, got q = " + std::to_string(q));
  const std::size_t width = enumeration_width(g);
  if (width > limits.max_ambient || width > 31)
    throw LimitExceeded("ambient dimension " + std::to_string(width) + " exceeds limit " +
                        std::to_string(limits.max_ambient));
  // q^width with overflow guard.
  std::uint64_t work = 1;
  for (std::size_t i = 0; i < width; ++i) {
    if (work > limits.max_work / q) throw LimitExceeded("q^N exceeds the work limit");
    work *= q;
  }
  const ConeMasks cm = cone_masks(g);
  const std::uint64_t total = width == 0 ? 0 : (work - 1) / (q - 1);

  if (shards == 0) shards = std::max(1U, std::thread::hardware_concurrency());
  shards = static_cast<unsigned>(std::min<std::uint64_t>(shards, std::max<std::uint64_t>(1, total / 4096)));
  std::vector<std::future<std::uint64_t>> parts;
  for (unsigned s = 0; s < shards; ++s) {
    const std::uint64_t b = total * s / shards;
    const std::uint64_t e = total * (s + 1) / shards;
    parts.push_back(std::async(shards == 1 ? std::launch::deferred : std::launch::async,
                               [&cm, q, b, e] { return count_range(cm, q, b, e); }));
  }
  std::uint64_t count = 0;
  for (auto& f : parts) count += f.get();
  return count + static_cast<std::uint64_t>(g.free_edge_count()) * (q - 1);
}

// ---------------------------------------------------------------------------
// Count tables and interpolation

std::string CountTable::to_csv() const {
  std::string out = "q,count\n";
  for (const auto& [q, n] : samples) out += std::to_string(q) + "," + std::to_string(n) + "\n";
  return out;
}

CountTable CountTable::from_csv(const std::string& graph_id, const std::string& csv) {
  CountTable t{graph_id, {}};
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "q,count") throw std::invalid_argument("missing 'q,count' header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad CSV row '" + line + "'");
    t.samples.emplace_back(std::stoull(line.substr(0, comma)), std::stoull(line.substr(comma + 1)));
  }
  return t;
}

CountTable count_table(const LooseGraph& g, const std::vector<std::uint64_t>& primes, const Limits& limits,
                       std::string graph_id) {
  CountTable t{std::move(graph_id), {}};
  for (auto q : primes) t.samples.emplace_back(q, enumerate_points(g, q, limits));
  return t;
}

LPolynomial interpolate(const CountTable& table) {
  const auto& s = table.samples;
  if (s.empty()) throw std::invalid_argument("interpolation needs at least one sample");
  std::set<std::uint64_t> xs;
  for (const auto& [q, n] : s)
    if (!xs.insert(q).second) throw std::invalid_argument("duplicate sample at q = " + std::to_string(q));

  std::vector<Rational> coeff(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    // basis_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j == i) continue;
      const Rational xj(static_cast<long long>(s[j].first));
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= xj * basis[k];
      }
      basis = std::move(next);
      denom *= Rational(static_cast<long long>(s[i].first)) - xj;
    }
    const Rational scale = Rational(static_cast<long long>(s[i].second)) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeff[k] += scale * basis[k];
  }

  std::vector<Integer> ints;
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    if (denominator(coeff[k]) != 1)
      throw ModelViolation("coefficient of L^" + std::to_string(k) + " is not an integer (" + coeff[k].str() + ")");
    ints.push_back(numerator(coeff[k]));
  }
  return LPolynomial::from_ascending(ints);
}

// ---------------------------------------------------------------------------
// Cross-check harness

std::string CrossCheckReport::describe() const {
  std::ostringstream out;
  auto line = [&](const std::string& route, const LPolynomial& p) {
    out << (p == clique ? "  " : "! ") << route << ": " << p.to_string() << "\n";
  };
  out << "  clique: " << clique.to_string() << "\n";
  line("surgery", surgery);
  if (tree) line("tree", *tree);
  if (interpolated) line("oracle", *interpolated);
  for (const auto& n : notes) out << "  note: " << n << "\n";
  out << (all_equal ? "  verdict: agree" : "  verdict: MISMATCH") << "\n";
  return out.str();
}

CrossCheckReport cross_check(const LooseGraph& g, const CrossCheckOptions& options) {
  CrossCheckReport r;
  r.clique = class_of(g) + options.fault;
  r.surgery = surgery_by_components(g);
  if (is_loose_tree(g)) r.tree = tree_class(g);

  std::size_t degree = g.max_degree();
  if (g.free_edge_count() > 0) degree = std::max<std::size_t>(degree, 1);
  const auto primes = first_primes(degree + 2);
  try {
    // deg+1 samples pin the polynomial; one more, when affordable, catches a
    // count that is polynomial of higher degree than expected.
    std::vector<std::uint64_t> use(primes.begin(), primes.end() - 1);
    CountTable table = count_table(g, use, options.limits);
    try {
      table.samples.emplace_back(primes.back(), enumerate_points(g, primes.back(), options.limits));
    } catch (const LimitExceeded&) {
      r.notes.push_back("extra sample at q = " + std::to_string(primes.back()) + " skipped (limits)");
    }
    r.interpolated = interpolate(table);
    r.counts = std::move(table);
  } catch (const LimitExceeded& e) {
    r.notes.push_back(std::string("oracle skipped: ") + e.what());
  } catch (const ModelViolation& e) {
    r.notes.push_back(std::string("oracle model violation: ") + e.what());
    r.all_equal = false;
    return r;
  }

  r.all_equal = r.surgery == r.clique && (!r.tree || *r.tree == r.clique) &&
                (!r.interpolated || *r.interpolated == r.clique);
  return r;
}

}  // namespace f1::oracle
