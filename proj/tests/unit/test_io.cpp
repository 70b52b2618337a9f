#include "scarlab/io/commands.hpp"
#include "scarlab/io/csv.hpp"
#include "scarlab/io/manifest.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace scarlab;
using namespace scarlab::io;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("scarlab_test_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

RunConfig small_config(Command command, const fs::path& out) {
  RunConfig c = default_config(command);
  c.length = 8;
  c.g_list = {-1.0, 1.0};
  c.t_max = 2.0;
  c.out_dir = out;
  return c;
}

}  // namespace

TEST_CASE("number formatting round trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  CHECK(format_g_label(1.0) == "+1");
  CHECK(format_g_label(-1.0) == "-1");
  CHECK(format_g_label(0.0) == "+0");
  CHECK(format_g_label(0.25) == "+0.25");
  CHECK(trace_file_name(18, -1.0) == "trace_L18_g-1.csv");
}

TEST_CASE("sha256 of a known string") {
  const fs::path dir = scratch_dir("sha");
  std::ofstream(dir / "abc.txt", std::ios::binary) << "abc";
  CHECK(sha256_file(dir / "abc.txt") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("fig2 trace schema") {
  const fs::path dir = scratch_dir("fig2");
  std::ostringstream log;
  REQUIRE(run(small_config(Command::fig2, dir), log) == kExitOk);
  const auto rows = read_csv(dir / trace_file_name(8, 1.0));
  REQUIRE(rows.size() == 102);
  CHECK(rows[0].size() == 8);
  std::ostringstream header;
  for (std::size_t k = 0; k < rows[0].size(); ++k) header << (k ? "," : "") << rows[0][k];
  CHECK(header.str() == trace_header());
  CHECK(std::stod(rows[1][0]) == 0.0);
  CHECK(std::stod(rows[1][2]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::stod(rows.back()[0]) == doctest::Approx(2.0));
}

TEST_CASE("outputs are byte-identical across runs and hashed in the manifest") {
  for (Command cmd : {Command::fig2, Command::fig3, Command::fig4}) {
    CAPTURE(command_name(cmd));
    const fs::path a = scratch_dir("det_a");
    const fs::path b = scratch_dir("det_b");
    std::ostringstream log;
    REQUIRE(run(small_config(cmd, a), log) == kExitOk);
    REQUIRE(run(small_config(cmd, b), log) == kExitOk);

    std::ifstream manifest_in(a / (std::string(command_name(cmd)) + "_manifest.json"));
    const nlohmann::json manifest = nlohmann::json::parse(manifest_in);
    REQUIRE(manifest.contains("artifacts"));
    CHECK(manifest["artifacts"].size() == 2);
    CHECK(manifest["basis_dimension"] == 47);
    for (const auto& art : manifest["artifacts"]) {
      const std::string file = art["file"];
      CHECK(slurp(a / file) == slurp(b / file));
      CHECK(art["sha256"] == sha256_file(a / file));
    }
  }
}

TEST_CASE("pnup rows are normalized distributions") {
  const fs::path dir = scratch_dir("pnup");
  std::ostringstream log;
  REQUIRE(run(small_config(Command::pnup, dir), log) == kExitOk);
  const auto rows = read_csv(dir / pnup_file_name(8, -1.0));
  REQUIRE(rows.size() == 48);
  CHECK(rows[0].back() == "nup_4");
  int scars = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    double sum = 0.0;
    for (std::size_t c = 5; c < rows[r].size(); ++c) sum += std::stod(rows[r][c]);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    scars += std::stoi(rows[r][4]);
  }
  CHECK(scars == 9);
}

TEST_CASE("entropy and single-file commands") {
  const fs::path dir = scratch_dir("misc");
  std::ostringstream log;
  REQUIRE(run(small_config(Command::entropy, dir), log) == kExitOk);
  CHECK(read_csv(dir / entropy_file_name(8, 1.0)).size() == 48);
  REQUIRE(run(small_config(Command::basis, dir), log) == kExitOk);
  const auto basis_rows = read_csv(dir / "basis_L8.csv");
  REQUIRE(basis_rows.size() == 48);
  CHECK(basis_rows[1][2] == "00000000");
  REQUIRE(run(small_config(Command::spectrum, dir), log) == kExitOk);
  CHECK(read_csv(dir / "spectrum_L8.csv").size() == 48);
  REQUIRE(run(small_config(Command::scars, dir), log) == kExitOk);
  CHECK(fs::exists(dir / "scars_manifest.json"));
}

TEST_CASE("usage errors and verify exit codes") {
  const fs::path dir = scratch_dir("verify");
  std::ostringstream log;
  RunConfig bad = small_config(Command::verify, dir);
  bad.length = 7;
  CHECK(run(bad, log) == kExitUsage);
  bad.length = 14;
  CHECK(run(bad, log) == kExitUsage);
  RunConfig step = small_config(Command::fig2, dir);
  step.t_step = -0.1;
  CHECK(run(step, log) == kExitUsage);

  RunConfig ok = small_config(Command::verify, dir);
  ok.g_list = {-1.0, 0.0, 1.0};
  CHECK(run(ok, log) == kExitOk);
  ok.inject_sign_flip = true;
  CHECK(run(ok, log) == kExitCheckFailure);

  CHECK(parse_command("fig4") == Command::fig4);
  CHECK_FALSE(parse_command("fig5").has_value());
  CHECK(command_names().size() == 10);
}
