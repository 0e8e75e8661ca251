#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropm0n/cycle.hpp"
#include "tropm0n/io.hpp"
#include "tropm0n/parallel.hpp"
#include "tropm0n/psi.hpp"
#include "tropm0n/qspace.hpp"
#include "tropm0n/trees.hpp"
#include "tropm0n/verify.hpp"

namespace {

using namespace tropm0n;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << text;
}

Json read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return Json::parse(std::cin);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  return Json::parse(in);
}

void run_enumerate(int n, int dim, const std::string& format,
                   const std::string& output) {
  const std::vector<ConeType> cones = enumerate_cones(n, dim);
  if (format == "dot") {
    std::ostringstream out;
    for (std::size_t i = 0; i < cones.size(); ++i) {
      out << cone_to_dot(cones[i], "cone_" + std::to_string(i));
    }
    write_output(out.str(), output);
    return;
  }
  Json list = Json::array();
  for (const ConeType& cone : cones) {
    list.push_back(cone_to_json(cone));
  }
  const Json j{{"schema", kSchemaVersion},
               {"n", n},
               {"dim", dim},
               {"count", cones.size()},
               {"cones", std::move(list)}};
  write_output(dump(j), output);
}

void run_embed(const std::string& input, const std::string& output) {
  const MetricTree tree = metric_tree_from_json(read_input(input));
  const RationalVector v = embed_curve(tree.cone, tree.lengths);
  const Json j{{"schema", kSchemaVersion},
               {"n", tree.cone.n()},
               {"coordinates", vector_to_json(v)}};
  write_output(dump(j), output);
}

void run_psi(int n, const std::vector<int>& exponents,
             const std::string& method, bool check, int check_ridges,
             std::uint64_t seed, const std::string& output) {
  const PsiSpec spec(n, exponents);
  if (method == "all") {
    const Cycle fast = check
                           ? psi_product_checked(spec, seed,
                                                 static_cast<std::size_t>(
                                                     check_ridges))
                                 .result
                           : psi_product(spec);
    const Cycle closed = psi_product_closed_form(spec);
    const Cycle generic = psi_product_generic(spec);
    const Json j{{"schema", kSchemaVersion},
                 {"cycle", cycle_to_json(fast)},
                 {"closed_form_diff",
                  diffs_to_json(n, diff_cycles(fast, closed)).at("diffs")},
                 {"generic_diff",
                  diffs_to_json(n, diff_cycles(fast, generic)).at("diffs")}};
    write_output(dump(j), output);
    return;
  }
  Cycle result(n, 0);
  if (method == "closed") {
    result = psi_product_closed_form(spec);
  } else if (method == "generic") {
    result = psi_product_generic(spec);
  } else if (check) {
    result =
        psi_product_checked(spec, seed, static_cast<std::size_t>(check_ridges))
            .result;
  } else {
    result = psi_product(spec);
  }
  write_output(dump(cycle_to_json(result)), output);
}

int run_verify(const std::string& suite, int max_n, int max_m, int samples,
               int random_specs, std::uint64_t seed,
               const std::string& output) {
  VerifyReport report;
  if (suite == "lemmas") {
    report = verify_lemmas(max_n, samples, seed);
  } else if (suite == "balancing") {
    report = verify_balancing(max_n);
  } else if (suite == "unimodular") {
    report = verify_unimodular(max_n);
  } else if (suite == "theorem") {
    report = verify_theorem(max_n, random_specs, seed);
  } else {
    report = verify_identities(max_m);
  }
  const Json j{{"schema", kSchemaVersion},
               {"suite", report.suite},
               {"checks", report.checks},
               {"failure_count", report.failure_count},
               {"failures", report.failures},
               {"passed", report.passed()}};
  write_output(dump(j), output);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations on the space of n-marked rational tropical "
      "curves: cone enumeration, curve embedding, psi-class products, and "
      "verification suites.  Set TROPM0N_THREADS to bound the worker "
      "count."};
  app.require_subcommand(1);

  int rc = 0;

  auto* enumerate =
      app.add_subcommand("enumerate", "List all cone types of one dimension");
  int en_n = 0;
  int en_dim = 0;
  std::string en_format = "json";
  std::string en_output = "-";
  enumerate->add_option("--n", en_n, "number of leaf labels")->required();
  enumerate->add_option("--dim", en_dim, "cone dimension")->required();
  enumerate->add_option("--format", en_format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  enumerate->add_option("--output", en_output, "file path, - for stdout");
  enumerate->callback(
      [&] { run_enumerate(en_n, en_dim, en_format, en_output); });

  auto* embed = app.add_subcommand(
      "embed", "Map a metric tree to its pairwise-distance coordinates");
  std::string em_input = "-";
  std::string em_output = "-";
  embed->add_option("--input", em_input, "metric tree JSON, - for stdin");
  embed->add_option("--output", em_output, "file path, - for stdout");
  embed->callback([&] { run_embed(em_input, em_output); });

  auto* psi = app.add_subcommand(
      "psi", "Intersect psi classes with the given exponents");
  int ps_n = 0;
  std::vector<int> ps_k;
  std::string ps_method = "fast";
  bool ps_check = false;
  int ps_check_ridges = 8;
  std::uint64_t ps_seed = 1;
  std::string ps_output = "-";
  psi->add_option("--n", ps_n, "number of leaf labels")->required();
  psi->add_option("--k", ps_k, "exponent per label, comma separated")
      ->required()
      ->delimiter(',');
  psi->add_option("--method", ps_method,
                  "fast: divisors via minima; generic: divisors of the "
                  "potential, rescaled; closed: vertex-valence weights; all: "
                  "every method plus cross-diffs")
      ->check(CLI::IsMember({"fast", "generic", "closed", "all"}));
  psi->add_flag("--check", ps_check,
                "revalidate sampled ridges of every step against the "
                "unscaled potential divisor");
  psi->add_option("--check-ridges", ps_check_ridges,
                  "ridges sampled per step with --check")
      ->check(CLI::PositiveNumber);
  psi->add_option("--seed", ps_seed, "sampling seed for --check");
  psi->add_option("--output", ps_output, "file path, - for stdout");
  psi->callback([&] {
    run_psi(ps_n, ps_k, ps_method, ps_check, ps_check_ridges, ps_seed,
            ps_output);
  });

  auto* verify =
      app.add_subcommand("verify", "Run a verification suite and report");
  std::string vf_suite;
  int vf_max_n = 6;
  int vf_max_m = 6;
  int vf_samples = 200;
  int vf_random_specs = 50;
  std::uint64_t vf_seed = 1;
  std::string vf_output = "-";
  verify
      ->add_option("suite", vf_suite,
                   "lemmas | balancing | unimodular | theorem | identities")
      ->required()
      ->check(CLI::IsMember(
          {"lemmas", "balancing", "unimodular", "theorem", "identities"}));
  verify->add_option("--max-n", vf_max_n, "largest number of leaf labels");
  verify->add_option("--max-m", vf_max_m,
                     "largest tuple length for identity sweeps");
  verify->add_option("--samples", vf_samples,
                     "random vectors per n in the lemma suite");
  verify->add_option("--random-specs", vf_random_specs,
                     "random exponent vectors per n beyond the exhaustive "
                     "range in the theorem suite");
  verify->add_option("--seed", vf_seed, "seed for randomized checks");
  verify->add_option("--output", vf_output, "file path, - for stdout");
  verify->callback([&] {
    rc = run_verify(vf_suite, vf_max_n, vf_max_m, vf_samples, vf_random_specs,
                    vf_seed, vf_output);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
