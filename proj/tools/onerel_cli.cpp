// onerel: check a one-relator presentation and certify its Lie quotient.
//
//   onerel --input corpus/commutator_y1.pres --max-degree 8 --primes 2,3,5

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "onerel/report.hpp"

int main(int argc, char** argv) {
  using namespace onerel;
  CLI::App app{"Magnus-filtration and one-relator Lie ring checks"};
  RunConfig config;
  int max_degree = 0, e = 0;
  std::vector<std::string> checks{"all"};
  std::size_t max_rows = config.budget.max_rows, max_cols = config.budget.max_cols;

  app.add_option("--input", config.input_path, "presentation file")->required();
  app.add_option("--max-degree", max_degree, "degree cap N (default d + 6)");
  app.add_option("--e", e, "weight of the y-letters (default d + 1)");
  app.add_option("--primes", config.primes, "primes for the mod-p check")->delimiter(',');
  app.add_option("--seed", config.seed, "seed for the sampling suites");
  app.add_option("--samples", config.samples, "sample count for lemma2");
  app.add_option("--max-word-len", config.max_word_len, "maximum random word length");
  app.add_option("--check", checks, "gate, theorem3, hilbert, modp, lemma2, magnus-e1, all")->delimiter(',');
  app.add_option("--json-out", config.json_out, "write the JSON report here instead of stdout");
  app.add_flag("--force-downstream", config.force_downstream, "run later checks even if the gate rejects");
  app.add_option("--gate-cutoff", config.gate_cutoff, "cutoff for the gate when no max degree is given");
  app.add_flag("--timings", config.timings, "record wall-clock time per phase");
  app.add_option("--dump-matrices", config.matrix_dir, "directory for ideal matrices (plain text)");
  app.add_option("--max-rows", max_rows, "row budget per ideal matrix");
  app.add_option("--max-cols", max_cols, "column budget per ideal matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (max_degree != 0) config.max_degree = max_degree;
    if (e != 0) config.e = e;
    config.checks = parse_checks(checks);
    config.budget = {max_rows, max_cols};
    const auto report = run_report(config);
    const auto text = emit_report(report.json);
    if (config.json_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(config.json_out);
      if (!out) throw std::runtime_error("cannot write " + config.json_out);
      out << text;
    }
    return report.exit_code;
  } catch (const PresentationParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
  }
  return kExitUsage;
}
