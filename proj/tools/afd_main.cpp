#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "afd/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"afd: almost finite-dimensional representation toolkit"};

  std::string config_path;
  std::string field_override;
  std::string output_path;
  int n_max = -1;
  int k_bound = -1;
  long long seed = -1;
  bool quiet = false;

  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--field", field_override, "field override: gfp:P or rational");
  app.add_option("--n-max", n_max, "exhaustion depth override");
  app.add_option("--K", k_bound, "displacement bound override");
  app.add_option("--seed", seed, "seed override for randomized suites");
  app.add_option("--output", output_path, "write the report to a file instead of stdout");
  app.add_flag("--quiet", quiet, "suppress the summary echo when writing to a file");

  CLI11_PARSE(app, argc, argv);

  nlohmann::json config;
  try {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    in >> config;
    if (!field_override.empty()) config["field"] = field_override;
    if (n_max >= 0) config["n_max"] = n_max;
    if (k_bound >= 0) config["K"] = k_bound;
    if (seed >= 0) config["seed"] = seed;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  if (output_path.empty()) return afd::cli::run_to_stream(config, std::cout);

  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "cannot open output file: " << output_path << "\n";
    return 2;
  }
  int code = afd::cli::run_to_stream(config, out);
  if (!quiet) std::cerr << "wrote report to " << output_path << " (exit " << code << ")\n";
  return code;
}
