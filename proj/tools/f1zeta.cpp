// f1zeta: Grothendieck classes, counting polynomials and F1-zeta functions of
// loose graphs, plus q-analog and monoid-spectrum calculators.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or I/O error.

#include "f1/corpus.hpp"
#include "f1/monoid.hpp"
#include "f1/qanalog.hpp"
#include "f1/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  std::uint64_t seed = 20240601;
  std::size_t max_ambient = 8;
  std::vector<std::uint64_t> primes{2, 3, 5};
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

f1::LooseGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return f1::parse_graph(buf.str());
}

int cmd_compute(const Globals& g, const std::string& path, const std::vector<std::uint64_t>& counts, bool zeta,
                bool trace, bool ascii) {
  const f1::LooseGraph graph = load_graph(path);
  f1::cli::ComputeOptions opts;
  opts.count_primes = counts;
  opts.surgery_trace = trace;
  opts.unicode = !ascii;
  opts.limits.max_ambient = g.max_ambient;
  const f1::cli::Report r = f1::cli::build_report(graph, opts);
  if (g.json)
    std::cout << f1::cli::to_json(r).dump(2) << "\n";
  else
    std::cout << f1::cli::render_text(r, zeta);
  return r.all_verdicts_pass() ? kOk : kVerifyFailed;
}

int cmd_verify(const Globals& g, const std::string& path, bool corpus, std::size_t random_count,
               std::size_t exhaustive, bool inject_fault) {
  f1::cli::VerifyOptions opts;
  opts.limits.max_ambient = g.max_ambient;
  opts.primes = g.primes;
  opts.inject_fault = inject_fault;
  f1::cli::VerifySummary summary;
  if (corpus) {
    for (const auto& ng : f1::corpus::verification_corpus(g.seed, random_count, exhaustive))
      f1::cli::verify_graph(ng.name, ng.graph, opts, summary);
  } else {
    f1::cli::verify_graph(path, load_graph(path), opts, summary);
  }
  if (g.json) {
    std::cout << f1::cli::to_json(summary).dump(2) << "\n";
  } else {
    for (const auto& f : summary.failures) std::cout << "FAIL " << f.graph << " " << f.check << "\n" << f.detail << "\n";
    std::cout << (summary.failures.empty() ? "PASS" : "FAIL") << ": " << summary.graphs << " graph(s), "
              << summary.failures.size() << " failure(s), oracle skipped on " << summary.oracle_skipped << "\n";
  }
  return summary.failures.empty() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grothendieck classes and F1-zeta functions of loose graphs"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Seed for random corpora");
  app.add_option("--max-ambient", g.max_ambient, "Largest ambient dimension the oracle enumerates");
  app.add_option("--primes", g.primes, "Primes sampled by verify")->delimiter(',');

  auto* compute = app.add_subcommand("compute", "Class, zeta and counts of a graph file");
  compute->fallthrough();
  std::string compute_path;
  std::vector<std::uint64_t> counts;
  bool zeta = false, trace = false, ascii = false;
  compute->add_option("path", compute_path, "Loose graph file")->required();
  compute->add_option("--counts", counts, "Primes at which to enumerate points")->delimiter(',');
  compute->add_flag("--zeta", zeta, "Show the F1-zeta and arithmetic zeta");
  compute->add_flag("--surgery-trace", trace, "Record the surgery steps");
  compute->add_flag("--ascii", ascii, "ASCII rendering of zeta functions");

  auto* verify = app.add_subcommand("verify", "Cross-check every route on a graph or the corpus");
  verify->fallthrough();
  std::string verify_path;
  bool corpus = false, inject_fault = false;
  std::size_t random_count = 200, exhaustive = 5;
  verify->add_option("path", verify_path, "Loose graph file");
  verify->add_flag("--corpus", corpus, "Verify the generated corpus instead of a file");
  verify->add_option("--random", random_count, "Random graphs in the corpus");
  verify->add_option("--exhaustive", exhaustive, "Ambient bound of the exhaustive part of the corpus");
  verify->add_flag("--inject-fault", inject_fault, "Perturb the clique polynomial (harness self-test)");

  auto* qan = app.add_subcommand("qanalog", "q-integers, Gaussian binomials, F1 subspace and GL counts");
  qan->fallthrough();
  qan->require_subcommand(1);
  unsigned qa = 0, qb = 0;
  int sn = 0, sk = 0;
  auto* binom = qan->add_subcommand("binom", "Gaussian binomial [n k]_q");
  binom->add_option("n", qa)->required();
  binom->add_option("k", qb)->required();
  auto* qint = qan->add_subcommand("int", "[n]_q");
  qint->add_option("n", qa)->required();
  auto* qfact = qan->add_subcommand("factorial", "[n]_q!");
  qfact->add_option("n", qa)->required();
  auto* f1sub = qan->add_subcommand("f1subspaces", "k-subspaces of PG(n, F1)");
  f1sub->add_option("n", sn)->required();
  f1sub->add_option("k", sk)->required();
  auto* gl = qan->add_subcommand("gl", "|GL_d(F_{1^n})|");
  gl->add_option("d", qa)->required();
  gl->add_option("n", qb)->required();

  auto* mon = app.add_subcommand("monoid", "Spectra and point counts of monoid presentations");
  mon->fallthrough();
  mon->require_subcommand(1);
  std::string pres;
  unsigned bound = f1::monoid::kDefaultBound, field = 2;
  auto* mspec = mon->add_subcommand("spec", "Prime ideals");
  mspec->add_option("presentation", pres)->required();
  mspec->add_option("--bound", bound, "Exponent bound of the congruence search");
  auto* mmax = mon->add_subcommand("maximal", "The maximal ideal M \\ M^x");
  mmax->add_option("presentation", pres)->required();
  mmax->add_option("--bound", bound, "Exponent bound of the congruence search");
  auto* mhom = mon->add_subcommand("homcount", "Morphisms into (F_q, *)");
  mhom->add_option("presentation", pres)->required();
  mhom->add_option("q", field)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(g, compute_path, counts, zeta, trace, ascii);
    if (verify->parsed()) {
      if (!corpus && verify_path.empty()) {
        std::cerr << "verify: give a graph file or --corpus\n";
        return kUsage;
      }
      return cmd_verify(g, verify_path, corpus, random_count, exhaustive, inject_fault);
    }
    if (qan->parsed()) {
      using namespace f1::qanalog;
      if (binom->parsed()) std::cout << gauss_binomial(qa, qb).to_string() << "\n";
      if (qint->parsed()) std::cout << q_integer(qa).to_string() << "\n";
      if (qfact->parsed()) std::cout << q_factorial(qa).to_string() << "\n";
      if (f1sub->parsed()) std::cout << f1_subspace_count(sn, sk) << "\n";
      if (gl->parsed()) std::cout << gl_order(qa, qb) << "\n";
      return kOk;
    }
    if (mon->parsed()) {
      using namespace f1::monoid;
      const MonoidPresentation m = parse_presentation(pres);
      if (mspec->parsed()) {
        const auto primes = spec(m, bound);
        std::cout << primes.size() << " prime(s)\n";
        for (const auto& p : primes) std::cout << render_prime(m, p) << "\n";
      }
      if (mmax->parsed()) std::cout << render_prime(m, maximal_ideal(m, bound)) << "\n";
      if (mhom->parsed()) std::cout << hom_count(m, field) << "\n";
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
