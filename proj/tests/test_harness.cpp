#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ccga/harness.hpp"

using namespace ccga;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) { return split(text, '\n'); }

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.variant.kind = AlgorithmKind::cga;
  cfg.problem = ProblemKind::onemax;
  cfg.bits = 20;
  cfg.populations = {10, 20};
  cfg.capacities = {0, 1, 5};
  cfg.runs = 6;
  cfg.base_seed = 100;
  return cfg;
}

std::string csv_of(const SweepResult& r) {
  std::ostringstream out;
  write_csv(r, out);
  return out.str();
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("list parsing accepts values and inclusive ranges") {
  CHECK(parse_uint_list("10:100:10") ==
        std::vector<std::uint64_t>{10, 20, 30, 40, 50, 60, 70, 80, 90, 100});
  CHECK(parse_uint_list("0:3") == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(parse_uint_list("1, 20") == std::vector<std::uint64_t>{1, 20});
  CHECK(parse_uint_list("1,5:7") == std::vector<std::uint64_t>{1, 5, 6, 7});
  CHECK_THROWS_AS(parse_uint_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_uint_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_uint_list("5:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_uint_list("1:5:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_uint_list("-3"), std::invalid_argument);
}

TEST_CASE("settings text applies key=value lines") {
  std::istringstream in(
      "# sweep\n"
      "algo = ne-cga\n"
      "eta=5\n"
      "\n"
      "problem=binint\nbits=30\npop=10:30:10\ncache=0,20\npolicy=lru\nruns=3\nseed=9\n");
  ExperimentConfig cfg;
  for (const auto& [k, v] : parse_settings(in)) apply_setting(cfg, k, v);
  CHECK(cfg.variant.kind == AlgorithmKind::ne_cga);
  CHECK(cfg.variant.inheritance_length == 5u);
  CHECK(cfg.problem == ProblemKind::binary_integer);
  CHECK(cfg.bits == 30);
  CHECK(cfg.populations == std::vector<std::uint32_t>{10, 20, 30});
  CHECK(cfg.capacities == std::vector<std::size_t>{0, 20});
  CHECK(cfg.policy == CachePolicy::lru);
  CHECK(cfg.runs == 3);
  CHECK(cfg.base_seed == 9);
  CHECK_NOTHROW(cfg.validate());

  std::istringstream bad("algo\n");
  CHECK_THROWS_AS(parse_settings(bad), std::invalid_argument);
  CHECK_THROWS_AS(apply_setting(cfg, "colour", "red"), std::invalid_argument);
  CHECK_THROWS_AS(apply_setting(cfg, "runs", "many"), std::invalid_argument);
}

TEST_CASE("config file loads from disk") {
  const auto path = temp_file("ccga_test_config.txt");
  {
    std::ofstream out(path);
    out << "algo=cga-t\ns=3\nruns=2\n";
  }
  ExperimentConfig cfg;
  load_config_file(cfg, path);
  CHECK(cfg.variant.kind == AlgorithmKind::cga_tournament);
  CHECK(cfg.variant.tournament_size == 3);
  CHECK(cfg.runs == 2);
  std::filesystem::remove(path);
  CHECK_THROWS(load_config_file(cfg, path));
}

TEST_CASE("config validation") {
  ExperimentConfig cfg = small_config();
  CHECK_NOTHROW(cfg.validate());
  cfg.populations.clear();
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.populations = {1};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.runs = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.problem = ProblemKind::binary_integer;
  cfg.bits = 64;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.variant.kind = AlgorithmKind::cga_round_robin;
  cfg.variant.round_robin_size = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.capacities.clear();
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("capacity 0 gives speedup 1 and no reduction") {
  ExperimentConfig cfg = small_config();
  const CellResult cell = run_cell(cfg, 20, 0);
  CHECK(cell.hits_sum == 0);
  CHECK(cell.speedup() == 1.0);
  CHECK(cell.speedup_mean_of_runs == 1.0);
  CHECK(cell.reduction_pct() == 0.0);
  CHECK(cell.replicates.size() == 6);
  CHECK(cell.replicates[3].seed == 103);
}

TEST_CASE("cells differing only in capacity share trajectories") {
  ExperimentConfig cfg = small_config();
  const CellResult none = run_cell(cfg, 20, 0);
  const CellResult some = run_cell(cfg, 20, 5);
  for (std::size_t r = 0; r < none.replicates.size(); ++r) {
    CHECK(none.replicates[r].iterations == some.replicates[r].iterations);
    CHECK(none.replicates[r].solution == some.replicates[r].solution);
    CHECK(none.replicates[r].misses == some.replicates[r].hits + some.replicates[r].misses);
  }
  CHECK(none.neval_nocache() == some.neval_nocache());
}

TEST_CASE("sweep covers every cell in order and averages each axis") {
  const SweepResult r = sweep(small_config());
  REQUIRE(r.cells.size() == 6);
  CHECK(r.cells[0].population == 10);
  CHECK(r.cells[0].capacity == 0);
  CHECK(r.cells[5].population == 20);
  CHECK(r.cells[5].capacity == 5);
  REQUIRE(r.average_over_populations.size() == 3);
  const auto& avg5 = r.average_over_populations[2];
  CHECK(avg5.fixed == 5);
  CHECK(avg5.speedup == doctest::Approx((r.cells[2].speedup() + r.cells[5].speedup()) / 2));
  REQUIRE(r.average_over_capacities.size() == 2);
  CHECK(r.average_over_capacities[0].cells == 3);
}

TEST_CASE("population axis of ten sizes yields ten cells and their mean") {
  ExperimentConfig cfg = small_config();
  cfg.bits = 10;
  cfg.runs = 2;
  cfg.populations.clear();
  for (std::uint32_t n = 10; n <= 100; n += 10) cfg.populations.push_back(n);
  cfg.capacities = {1};
  const SweepResult r = sweep(cfg);
  REQUIRE(r.cells.size() == 10);
  double mean = 0;
  for (const auto& c : r.cells) mean += c.speedup();
  CHECK(r.average_over_populations.at(0).speedup == doctest::Approx(mean / 10).epsilon(1e-12));
}

TEST_CASE("capacity axis 0..20 yields 21 cells") {
  ExperimentConfig cfg = small_config();
  cfg.bits = 10;
  cfg.runs = 2;
  cfg.populations = {100};
  cfg.capacities.clear();
  for (std::size_t c = 0; c <= 20; ++c) cfg.capacities.push_back(c);
  CHECK(sweep(cfg).cells.size() == 21);
}

TEST_CASE("csv: header, column count and per-row consistency") {
  const SweepResult r = sweep(small_config());
  const auto lines = lines_of(csv_of(r));
  REQUIRE(lines.size() == 1 + r.cells.size());
  CHECK(lines[0] == csv_header);
  const auto header = split(lines[0], ',');
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    REQUIRE(cols.size() == header.size());
    const double hits = std::stod(cols[8]);
    const double misses = std::stod(cols[9]);
    CHECK(std::stod(cols[10]) == hits + misses);
    CHECK(std::stod(cols[11]) == misses);
    CHECK(std::abs(std::stod(cols[12]) - (hits + misses) / misses) < 1e-6);
    CHECK(std::abs(std::stod(cols[15]) - 100 * hits / (hits + misses)) < 1e-6);
    CHECK(cols[14] == cols[15]);
    // six fractional digits
    CHECK(cols[12].size() - cols[12].find('.') - 1 == 6);
  }
}

TEST_CASE("aggregate rows satisfy the metric identities exactly") {
  const SweepResult r = sweep(small_config());
  for (const CellResult& c : r.cells) {
    const double h = static_cast<double>(c.hits_sum), m = static_cast<double>(c.misses_sum);
    CHECK(std::abs(c.reduction_pct() - 100 * h / (h + m)) < 1e-9);
    CHECK(std::abs(c.speedup() - (h + m) / m) < 1e-9);
    CHECK(c.speedup() >= 1.0);
  }
}

TEST_CASE("one cell writes a two-line file; reruns are byte-identical") {
  ExperimentConfig cfg = small_config();
  cfg.populations = {10};
  cfg.capacities = {3};
  const auto a = temp_file("ccga_test_a.csv");
  const auto b = temp_file("ccga_test_b.csv");
  write_csv(sweep(cfg), a);
  cfg.threads = 3;
  write_csv(sweep(cfg), b);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string text = slurp(a);
  CHECK(lines_of(text).size() == 2);
  CHECK(text == slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  CHECK_THROWS(write_csv(sweep(cfg), std::filesystem::path("/nonexistent/dir/out.csv")));
}

TEST_CASE("replicate failures name the cell and seed") {
  ExperimentConfig cfg = small_config();
  cfg.bits = 100;
  cfg.iteration_cap = 5;
  try {
    run_cell(cfg, 50, 1);
    FAIL("expected RunFailure");
  } catch (const RunFailure& e) {
    const std::string what = e.what();
    CHECK(what.find("pop=50") != std::string::npos);
    CHECK(what.find("seed=100") != std::string::npos);
  }
}

TEST_CASE("trace output has one row per replicate") {
  const SweepResult r = sweep(small_config());
  std::ostringstream out;
  write_trace(r, out);
  CHECK(lines_of(out.str()).size() == 1 + 6 * r.cells.size());
  std::ostringstream summary;
  write_summary(r, summary);
  CHECK(summary.str().find("average over populations") != std::string::npos);
}
