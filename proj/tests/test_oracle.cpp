#include "f1/corpus.hpp"
#include "f1/oracle.hpp"

#include "doctest.h"

using namespace f1;
using namespace f1::oracle;

namespace {

LPolynomial P(std::initializer_list<long long> ascending) { return LPolynomial::from_ascending(ascending); }

}  // namespace

TEST_CASE("frozen point counts") {
  // Independent brute-force counts of the cone model.
  const LooseGraph gamma = corpus::gamma_uv(2);
  CHECK(enumerate_points(gamma, 2) == 14);
  CHECK(enumerate_points(gamma, 3) == 38);
  CHECK(enumerate_points(gamma, 5) == 152);
  CHECK(enumerate_points(gamma, 7) == 394);
  const LooseGraph k3 = corpus::complete_graph(3);
  CHECK(enumerate_points(k3, 2) == 7);
  CHECK(enumerate_points(k3, 3) == 13);
  CHECK(enumerate_points(corpus::affine_star(2), 5) == 25);
  CHECK(enumerate_points(corpus::free_loose_edge(), 7) == 6);
  CHECK(enumerate_points(corpus::path(3), 3) == 11);
  CHECK(enumerate_points(LooseGraph{}, 3) == 0);
}

TEST_CASE("sharding does not change the count") {
  corpus::Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const LooseGraph g = corpus::random_loose_graph(rng, 6);
    CHECK(enumerate_points(g, 3, {}, 1) == enumerate_points(g, 3, {}, 5));
  }
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(enumerate_points(corpus::complete_graph(3), 4), LimitExceeded);
  CHECK_THROWS_AS(enumerate_points(corpus::complete_graph(9), 2), LimitExceeded);
  CHECK_THROWS_AS(enumerate_points(corpus::complete_graph(8), 11), LimitExceeded);
  Limits tight;
  tight.max_work = 100;
  CHECK_THROWS_AS(enumerate_points(corpus::complete_graph(3), 5, tight), LimitExceeded);
  CHECK(enumeration_width(corpus::gamma_uv(2)) == 4);
  CHECK(enumeration_width(corpus::affine_star(3)) == 4);
  CHECK(enumeration_width(corpus::free_loose_edge()) == 0);
}

TEST_CASE("primes") {
  CHECK(first_primes(5) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("interpolation") {
  const CountTable t = count_table(corpus::gamma_uv(2), {2, 3, 5, 7}, {}, "gamma");
  CHECK(interpolate(t) == P({2, 0, 1, 1}));
  CHECK(t.to_csv() == "q,count\n2,14\n3,38\n5,152\n7,394\n");
  const CountTable back = CountTable::from_csv("gamma", t.to_csv());
  CHECK(back.samples == t.samples);
  CHECK_THROWS_AS(interpolate(CountTable{"x", {{2, 0}, {3, 1}, {5, 0}}}), ModelViolation);
  CHECK_THROWS_AS(interpolate(CountTable{"x", {}}), std::invalid_argument);
  CHECK_THROWS_AS(CountTable::from_csv("x", "n,count\n"), std::invalid_argument);
}

TEST_CASE("oracle equals the clique formula on all small graphs") {
  for (const auto& ng : corpus::all_loose_graphs(4)) {
    CAPTURE(ng.name);
    const LPolynomial p = class_of(ng.graph);
    for (std::uint64_t q : {2, 3, 5}) CHECK(Integer(enumerate_points(ng.graph, q)) == p.eval(Integer(q)));
  }
}

TEST_CASE("cross check") {
  const CrossCheckReport r = cross_check(corpus::gamma_uv(2));
  CHECK(r.all_equal);
  REQUIRE(r.interpolated);
  CHECK(*r.interpolated == P({2, 0, 1, 1}));
  CHECK_FALSE(r.tree);

  const CrossCheckReport tree = cross_check(corpus::path(4));
  REQUIRE(tree.tree);
  CHECK(tree.all_equal);

  CrossCheckOptions faulty;
  faulty.fault = LPolynomial(1);
  const CrossCheckReport bad = cross_check(corpus::gamma_uv(2), faulty);
  CHECK_FALSE(bad.all_equal);
  CHECK(bad.describe().find("! surgery: L^3+L^2+2") != std::string::npos);

  // Too large for the oracle: the route is skipped, not failed.
  const CrossCheckReport big = cross_check(corpus::complete_graph(9));
  CHECK(big.all_equal);
  CHECK_FALSE(big.interpolated);
  CHECK_FALSE(big.notes.empty());

  CHECK(cross_check(parse_graph("edge a b\nedge c d\nloose2")).all_equal);
}
