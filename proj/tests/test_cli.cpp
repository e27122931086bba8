#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef HINDLAB_CLI_PATH
#error "HINDLAB_CLI_PATH must point at the hindlab binary"
#endif
#ifndef HINDLAB_GOLDEN_DIR
#error "HINDLAB_GOLDEN_DIR must point at the golden file directory"
#endif

namespace {

using nlohmann::ordered_json;

struct RunOutput {
  std::string out;
  int exit_code = -1;
};

RunOutput run_cli(const std::string& args) {
  const std::string cmd = std::string(HINDLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunOutput result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(HINDLAB_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Full-report comparison modulo wall clock: the report is deterministic
/// except for wall_time_ms, which is zeroed on both sides.
void check_json_golden(const std::string& args, const std::string& golden_name) {
  RunOutput run = run_cli(args);
  REQUIRE(run.exit_code == 0);
  ordered_json actual = ordered_json::parse(run.out);
  actual["wall_time_ms"] = 0;
  ordered_json expected = ordered_json::parse(read_file(golden_name));
  CHECK(actual.dump() == expected.dump());
}

}  // namespace

TEST_CASE("color table json report matches golden") {
  check_json_golden("--format json color-table --n 8", "color_table_n8.json");
}

TEST_CASE("search max csv stream matches golden bytes") {
  RunOutput run = run_cli("--format csv search-max --n-range 4..8");
  CHECK(run.exit_code == 0);
  CHECK(run.out == read_file("search_max_4_8.csv"));
}

TEST_CASE("search max json report matches golden") {
  check_json_golden("--format json search-max --n-range 4..8", "search_max_4_8.json");
}

TEST_CASE("hindman min n json report matches golden") {
  check_json_golden("--format json hindman-min-n --max-n 2", "hindman_max2.json");
}

TEST_CASE("ordinal demo default json report matches golden") {
  check_json_golden("--format json ordinal-demo", "ordinal_demo_default.json");
}

TEST_CASE("hindman min n text output reports absence") {
  RunOutput run = run_cli("hindman-min-n --max-n 2");
  CHECK(run.exit_code == 0);
  CHECK(run.out == "min_n: absent\n");
}

TEST_CASE("single n range form") {
  RunOutput run = run_cli("--format csv search-max --n-range 5");
  CHECK(run.exit_code == 0);
  CHECK(run.out == "n,max_size,exhausted\r\n5,2,true\r\n");
}

TEST_CASE("verify suites succeed from the command line") {
  CHECK(run_cli("verify absorption").exit_code == 0);
  CHECK(run_cli("verify injectivity --n 8").exit_code == 0);
  CHECK(run_cli("verify max-semigroup --cases 50").exit_code == 0);
}

TEST_CASE("freegroup check runs a small batch") {
  RunOutput run = run_cli("--format json freegroup-check --cases 25 --seed 1");
  CHECK(run.exit_code == 0);
  ordered_json report = ordered_json::parse(run.out);
  CHECK(report["results"]["mismatches"] == 0);
  CHECK(report["results"]["pass"] == true);
  CHECK(report["results"]["products_checked"].get<int>() > 25);
}

TEST_CASE("report envelope carries command inputs and version") {
  RunOutput run = run_cli("--format json --seed 9 search-max --n-range 4..4 --coloring random");
  REQUIRE(run.exit_code == 0);
  ordered_json report = ordered_json::parse(run.out);
  auto it = report.begin();
  CHECK(it.key() == "command");
  CHECK(report["command"] == "search-max");
  CHECK(report["inputs"]["seed"] == 9);
  CHECK(report["inputs"]["coloring"] == "random");
  CHECK(report["version"].is_string());
  CHECK(report["wall_time_ms"].is_number());
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("verify no-such-suite").exit_code == 2);
  CHECK(run_cli("hindman-min-n --max-n 9").exit_code == 2);
  CHECK(run_cli("search-max --n-range 9..4").exit_code == 2);
  CHECK(run_cli("search-max --coloring /no/such/file.json").exit_code == 2);
  CHECK(run_cli("--format yaml color-table").exit_code == 2);
  CHECK(run_cli("ordinal-demo --bound garbage").exit_code == 2);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("search-max --help").exit_code == 0);
}

TEST_CASE("out flag writes the report to a file") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "hindlab_cli_out_test.json").string();
  std::filesystem::remove(path);
  RunOutput run = run_cli("--format json --out " + path + " color-table --n 4");
  CHECK(run.exit_code == 0);
  CHECK(run.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  ordered_json report;
  in >> report;
  CHECK(report["command"] == "color-table");
  std::filesystem::remove(path);
}

TEST_CASE("table coloring file drives a search") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "hindlab_cli_table.json").string();
  {
    std::ofstream out(path);
    out << R"({"kind":"table","entries":[[[0],0],[[1],0],[[2],1],[[0,1],1],[[0,2],0],[[1,2],0],[[0,1,2],1]]})";
  }
  RunOutput run = run_cli("--format json search-max --n-range 3..3 --coloring " + path);
  REQUIRE(run.exit_code == 0);
  ordered_json report = ordered_json::parse(run.out);
  CHECK(report["results"]["runs"][0]["max_size"] == 2);
  CHECK(report["results"]["runs"][0]["exhausted"] == true);
  std::filesystem::remove(path);
}
