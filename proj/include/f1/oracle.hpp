#pragma once

// Ground truth for the cone model: count F_q-points of the union of vertex
// cones by walking the whole ambient projective space, and recover the
// counting polynomial from sampled counts.

#include "f1/grothendieck.hpp"
#include "f1/loose_graph.hpp"
#include "f1/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace f1::oracle {

/// Enumeration request outside the configured limits.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sampled counts are not values of an integer polynomial.
class ModelViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_ambient = 8;
  /// Upper bound on q^N, the number of coordinate vectors walked.
  std::uint64_t max_work = 30'000'000;
};

struct CountTable {
  std::string graph_id;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;  // (q, count)

  /// "q,count" header plus one row per sample.
  std::string to_csv() const;
  static CountTable from_csv(const std::string& graph_id, const std::string& csv);
};

/// Number of ambient coordinates the enumeration walks (free loose edges are
/// counted separately and take no coordinates).
std::size_t enumeration_width(const LooseGraph& g);

/// Projective points (first nonzero coordinate 1) lying in at least one cone
/// A_v = {support in closed ambient neighborhood of v, x_v != 0}, plus q-1 per
/// free loose edge. `shards` = 0 picks the hardware concurrency.
std::uint64_t enumerate_points(const LooseGraph& g, std::uint64_t q, const Limits& limits = {},
                               unsigned shards = 0);

bool is_prime(std::uint64_t n);
/// First `count` primes, starting at 2.
std::vector<std::uint64_t> first_primes(std::size_t count);

CountTable count_table(const LooseGraph& g, const std::vector<std::uint64_t>& primes, const Limits& limits = {},
                       std::string graph_id = {});

/// Exact Lagrange interpolation through every sample; throws ModelViolation
/// when a coefficient is not an integer.
LPolynomial interpolate(const CountTable& table);

struct CrossCheckReport {
  LPolynomial clique;
  LPolynomial surgery;
  std::optional<LPolynomial> tree;
  std::optional<LPolynomial> interpolated;
  std::optional<CountTable> counts;
  std::vector<std::string> notes;  // skipped routes and why
  bool all_equal = false;

  /// Human-readable "route: polynomial" lines; mismatches are flagged.
  std::string describe() const;
};

struct CrossCheckOptions {
  Limits limits;
  /// Added to the clique polynomial before comparison; a test hook for the
  /// verification harness.
  LPolynomial fault;
};

/// Runs every applicable route. Disconnected graphs are handled per
/// component and summed; the oracle route is skipped (with a note) when the
/// needed primes exceed the limits.
CrossCheckReport cross_check(const LooseGraph& g, const CrossCheckOptions& options = {});

}  // namespace f1::oracle
