#include "f1/report.hpp"

#include "doctest.h"

using namespace f1;
using namespace f1::cli;

TEST_CASE("report for the affine plane") {
  ComputeOptions opts;
  opts.count_primes = {2, 3};
  opts.surgery_trace = true;
  const Report r = build_report(corpus::affine_star(2), opts);
  CHECK(r.polynomial == std::vector<Integer>{0, 0, 1});
  CHECK(r.euler_characteristic == 1);
  CHECK(r.zeta == std::map<unsigned, Integer>{{2, 1}});
  CHECK(r.zeta_text == "1/(t−2)");
  CHECK(r.arithmetic_zeta_text == "ζ(s−2)");
  CHECK(r.counts == std::map<std::uint64_t, std::uint64_t>{{2, 4}, {3, 9}});
  CHECK(r.all_verdicts_pass());
  CHECK(r.verdicts.size() == 4);

  const auto j = to_json(r);
  CHECK(j.at("polynomial") == nlohmann::json::array({0, 0, 1}));
  CHECK(j.at("zeta")[0].at("root") == 2);
  CHECK(j.at("zeta")[0].at("multiplicity") == 1);
  CHECK(j.at("counts").at("3") == 9);
}

TEST_CASE("JSON round trip") {
  ComputeOptions opts;
  opts.count_primes = {2};
  opts.surgery_trace = true;
  for (const auto& ng : corpus::reference_graphs()) {
    CAPTURE(ng.name);
    const Report r = build_report(ng.graph, opts);
    CHECK(r.all_verdicts_pass());
    CHECK(report_from_json(to_json(r)) == r);
    CHECK(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
  }
}

TEST_CASE("large coefficients are written as strings") {
  Report r = build_report(corpus::complete_graph(2), {});
  r.polynomial.push_back(Integer(1) << 80);
  const auto j = to_json(r);
  CHECK(j.at("polynomial").back().is_string());
  CHECK(report_from_json(j).polynomial.back() == (Integer(1) << 80));
}

TEST_CASE("text rendering") {
  ComputeOptions opts;
  opts.surgery_trace = true;
  const std::string text = render_text(build_report(corpus::gamma_uv(2), opts), true);
  CHECK(text.find("class: L^3+L^2+2\n") != std::string::npos);
  CHECK(text.find("F1-zeta: 1/(t^2(t−2)(t−3))\n") != std::string::npos);
  CHECK(text.find("resolve ") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("verification") {
  VerifySummary ok;
  verify_graph("gamma", corpus::gamma_uv(2), {}, ok);
  verify_graph("k4", corpus::complete_graph(4), {}, ok);
  CHECK(ok.graphs == 2);
  CHECK(ok.failures.empty());

  VerifyOptions faulty;
  faulty.inject_fault = true;
  VerifySummary bad;
  verify_graph("gamma", corpus::gamma_uv(2), faulty, bad);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].check == "cross_check");
  CHECK(to_json(bad).at("pass") == false);
}
