#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bsp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Poisson bracket tables on Bott-Samelson charts"};

  std::string type_str;
  std::vector<int> word;
  std::string gamma = "full";
  std::string format = "text";
  std::vector<std::string> checks;
  int mod = 0;

  app.add_option("--type", type_str, "Cartan type, e.g. A2, B3, G2")->required();
  app.add_option("--word", word, "comma separated simple reflection indices")
      ->required()
      ->delimiter(',');
  app.add_option("--gamma", gamma, "bitstring (1=reflection), or full|trivial|all");
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--checks", checks, "checks to run (comma separated)")->delimiter(',');
  app.add_option("--mod", mod, "reduce printed tables modulo this integer")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  bsp::JobSpec job;
  if (!bsp::parse_type(type_str, job.type, job.rank)) {
    std::cerr << "bad type string: " << type_str << "\n";
    return 2;
  }
  job.word.letters = word;
  job.gamma = gamma;
  job.format = format;
  job.checks = checks;
  if (mod > 0) job.mod = mod;

  try {
    return bsp::run_job(job, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
