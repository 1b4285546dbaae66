// Command-line front end for parameter sweeps.
//
//   ccga --algo pe-cga --problem binint --bits 30 --pop 10:100:10 \
//        --cache 1,20 --policy lru --runs 50 --seed 1 --out speedup.csv
//
// Settings are resolved as: built-in defaults, then --config FILE
// (key=value lines), then explicit flags.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "ccga/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Compact genetic algorithms with a fitness cache: experiment sweeps"};

  std::optional<std::string> config_file;
  std::optional<std::string> trace_file;
  bool summary = false;
  std::map<std::string, std::optional<std::string>> flags;
  const std::pair<const char*, const char*> known[] = {
      {"algo", "cga | cga-t | cga-rr | pe-cga | ne-cga"},
      {"s", "tournament size for cga-t"},
      {"m", "round-robin size for cga-rr"},
      {"eta", "inheritance length for ne-cga (default ceil(n/10))"},
      {"problem", "onemax | binint"},
      {"bits", "chromosome length"},
      {"pop", "population sizes, e.g. 10:100:10 or 50,100"},
      {"cache", "cache capacities, 0 = no cache, e.g. 0:20"},
      {"policy", "fifo | lru"},
      {"runs", "replicates per cell"},
      {"seed", "base seed; replicate r uses seed + r"},
      {"out", "CSV output path (stdout when omitted)"},
      {"threads", "worker threads, 0 = all cores"},
      {"cap", "iteration cap per run"},
  };
  for (const auto& [name, help] : known)
    app.add_option("--" + std::string(name), flags[name], help);
  app.add_option("--config", config_file, "key=value settings file, overridden by flags");
  app.add_option("--trace", trace_file, "write per-replicate rows to this CSV");
  app.add_flag("--summary", summary, "print axis averages to stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    ccga::ExperimentConfig config;
    config.variant.tournament_size = 4;
    config.variant.round_robin_size = 4;
    if (config_file) ccga::load_config_file(config, *config_file);
    for (const auto& [name, help] : known)
      if (const auto& v = flags[name]) ccga::apply_setting(config, name, *v);
    config.validate();

    const ccga::SweepResult result = ccga::sweep(config);
    if (config.output_path.empty())
      ccga::write_csv(result, std::cout);
    else
      ccga::write_csv(result, config.output_path);
    if (trace_file) {
      std::ofstream trace(*trace_file);
      if (!trace) throw std::runtime_error("cannot open " + *trace_file + " for writing");
      ccga::write_trace(result, trace);
    }
    if (summary) ccga::write_summary(result, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
