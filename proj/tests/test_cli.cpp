#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hjnn/commands.hpp"
#include "hjnn/config.hpp"
#include "hjnn/io.hpp"

using namespace hjnn;
namespace fs = std::filesystem;

namespace {

const fs::path kConfigs = HJNN_CONFIG_DIR;
const fs::path kData = fs::path(HJNN_GOLDEN_DIR).parent_path() / "data";

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("hjnn_test_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    out.push_back(cells);
  }
  return out;
}

std::string field_of(std::string_view text) {
  try {
    (void)parse_slice_spec(text);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_CASE("shipped configs round-trip through serialize") {
  for (const auto& entry : fs::directory_iterator(kConfigs)) {
    if (entry.path().extension() == ".cfg") {
      CAPTURE(entry.path().string());
      const auto cfg = load_problem_config(entry.path());
      CHECK(parse_problem_config(serialize(cfg)) == cfg);
      CHECK_NOTHROW((void)build_network(cfg));
    } else if (entry.path().extension() == ".slice") {
      const auto spec = load_slice_spec(entry.path());
      CHECK(serialize(parse_slice_spec(serialize(spec))) == serialize(spec));
    }
  }
}

TEST_CASE("config errors name the field") {
  const auto field = [](std::string_view text) -> std::string {
    try {
      (void)build_network(parse_problem_config(text));
    } catch (const ValidationError& e) {
      return e.field();
    }
    return "";
  };
  CHECK(field("dimension = 1\n[function]\nname = pnorm\np = 2\n[params]\n0;0\n") == "architecture");
  CHECK(field("architecture = arch1\ndimension = 2\n[function]\nname = clipped_quadratic_1d\n[params]\n0,0;0\n") ==
        "dimension");
  CHECK(field("architecture = arch1\ndimension = 1\n[function]\nname = pnorm\np = 3\n[params]\n0;0\n") ==
        "function.p");
  CHECK(field("architecture = arch2\ndimension = 1\n[function]\nname = half_squared_norm\nnegate = false\n"
              "[params]\n0;0\n") == "function.negate");
  // The params field carries the offending line.
  CHECK(field("architecture = arch1\ndimension = 1\n[function]\nname = pnorm\np = 1\n[params]\n0;x\n")
            .starts_with("params"));
}

TEST_CASE("the violated set is refused at load time") {
  CHECK_THROWS_AS(build_network(load_problem_config(kData / "quad1d_violated.cfg")), AssumptionHViolated);
  std::ostringstream out, err;
  CHECK(cmd_eval(kData / "quad1d_violated.cfg", "0", 1.0, out, err) == kExitValidation);
  CHECK(err.str().find("index 2") != std::string::npos);
  CHECK(out.str().empty());
}

TEST_CASE("slice file errors name the field") {
  CHECK(field_of("range = -1, 1, 2\ntimes = 1\n") == "axes");
  CHECK(field_of("axes = 1\nrange = -1, 1, 2\n") == "times");
  CHECK(field_of("axes = 0\nrange = -1, 1, 2\ntimes = 1\n") == "axes");
  CHECK(field_of("axes = 1\nrange = -1, 1\ntimes = 1\n") == "range");
  CHECK(field_of("axes = 1\nrange = -1, 1, 2.5\ntimes = 1\n") == "range");
  CHECK(field_of("axes = 1\nrange = -1, 1, 2\ntimes = one\n") == "times");
  CHECK(field_of("axes = 1\nrange = -1, 1, 2\ntimes = 1\ncolor = red\n") == "color");
}

TEST_CASE("eval output and exit codes") {
  std::ostringstream out, err;
  CHECK(cmd_eval(kConfigs / "clipped1d.cfg", "0", 1.0, out, err) == kExitOk);
  CHECK(out.str() == "value=0 argmin=2 gap=0.5\n");

  std::ostringstream o2, e2;
  CHECK(cmd_eval(kConfigs / "norm10d.cfg", "0,0", 1.0, o2, e2) == kExitValidation);
  CHECK(!e2.str().empty());
  std::ostringstream o3, e3;
  CHECK(cmd_eval(kConfigs / "clipped1d.cfg", "0", -1.0, o3, e3) == kExitValidation);
  std::ostringstream o4, e4;
  CHECK(cmd_eval(kConfigs / "no_such.cfg", "0", 1.0, o4, e4) == kExitIo);
  std::ostringstream o5, e5;
  CHECK(cmd_eval(kData / "bad_arch.cfg", "0", 1.0, o5, e5) == kExitValidation);
  CHECK(e5.str().find("architecture") != std::string::npos);
}

TEST_CASE("slice CSV schema, determinism and row count") {
  const fs::path d = scratch("schema");
  std::ostringstream out, err;
  REQUIRE(cmd_slice(kConfigs / "quad10d.cfg", kConfigs / "slice_2d_t0.slice", (d / "a").string(), false, out, err) ==
          kExitOk);
  REQUIRE(cmd_slice(kConfigs / "quad10d.cfg", kConfigs / "slice_2d_t0.slice", (d / "b").string(), false, out, err) ==
          kExitOk);
  for (const char* t : {"0", "1", "3", "5"}) {
    const std::string a = slurp(d / (std::string("a_t") + t + ".csv"));
    CHECK(a == slurp(d / (std::string("b_t") + t + ".csv")));
    const auto rows = csv_rows(a);
    REQUIRE(rows.size() == 10202);
    CHECK(rows[0] == std::vector<std::string>{"x1", "x2", "t", "value", "argmin", "gap"});
    CHECK(rows[1][0] == "-6");
    CHECK(rows[1][1] == "-6");
    CHECK(rows.back()[0] == "6");
    CHECK(rows.back()[1] == "6");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      REQUIRE(rows[i].size() == 6);
      CHECK(rows[i][2] == t);
      const int k = std::stoi(rows[i][4]);
      CHECK((k >= 1 && k <= 3));
    }
  }
  CHECK(!fs::exists(d / "a_t0.pgm"));
}

TEST_CASE("a 2 x 2 grid gives four rows") {
  const fs::path d = scratch("grid2x2");
  write_file(d / "g.slice", "axes = 1,2\nrange = -1, 1, 2\nrange = -1, 1, 2\ntimes = 1\n");
  std::ostringstream out, err;
  REQUIRE(cmd_slice(kConfigs / "quad10d.cfg", d / "g.slice", (d / "g").string(), true, out, err) == kExitOk);
  const auto rows = csv_rows(slurp(d / "g_t1.csv"));
  REQUIRE(rows.size() == 5);
  CHECK(rows[1][0] == "-1");
  CHECK(rows[1][1] == "-1");
  CHECK(rows[2][0] == "-1");
  CHECK(rows[2][1] == "1");
  CHECK(rows[4][0] == "1");
  CHECK(rows[4][1] == "1");
  const std::string pgm = slurp(d / "g_t1.pgm");
  CHECK(pgm.substr(0, 11) == "P5\n2 2\n255\n");
  CHECK(pgm.size() == 11 + 4);
}

TEST_CASE("l1 net at t = 0 reproduces -(x1^2 + x2^2)/2") {
  const fs::path d = scratch("l1");
  std::ostringstream out, err;
  REQUIRE(cmd_slice(kConfigs / "l1_5d.cfg", kConfigs / "slice_2d_t0.slice", (d / "s").string(), false, out, err) ==
          kExitOk);
  const auto rows = csv_rows(slurp(d / "s_t0.csv"));
  REQUIRE(rows.size() == 10202);
  double worst = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x1 = std::stod(rows[i][0]), x2 = std::stod(rows[i][1]);
    worst = std::max(worst, std::abs(std::stod(rows[i][3]) + 0.5 * (x1 * x1 + x2 * x2)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("PGM layout: rows follow the first axis, columns the last") {
  const fs::path d = scratch("pgm");
  write_file(d / "g.slice", "axes = 1,2\nrange = -2, 2, 3\nrange = -1, 1, 5\ntimes = 1\n");
  std::ostringstream out, err;
  REQUIRE(cmd_slice(kConfigs / "quad10d.cfg", d / "g.slice", (d / "g").string(), true, out, err) == kExitOk);
  const std::string pgm = slurp(d / "g_t1.pgm");
  const std::string header = "P5\n5 3\n255\n";
  REQUIRE(pgm.substr(0, header.size()) == header);
  REQUIRE(pgm.size() == header.size() + 15);

  // Pixel order equals CSV row order; the extreme values map to 0 and 255.
  const auto rows = csv_rows(slurp(d / "g_t1.csv"));
  double lo = 1e300, hi = -1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    lo = std::min(lo, std::stod(rows[i][3]));
    hi = std::max(hi, std::stod(rows[i][3]));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double v = std::stod(rows[i][3]);
    const auto px = static_cast<unsigned char>(pgm[header.size() + i - 1]);
    CHECK(px == std::lround(255.0 * (v - lo) / (hi - lo)));
  }
}

TEST_CASE("slice failures") {
  const fs::path d = scratch("fail");
  std::ostringstream out, err;
  write_file(d / "bad.slice", "axes = 3\nrange = -1, 1, 2\ntimes = 1\n");
  CHECK(cmd_slice(kConfigs / "clipped1d.cfg", d / "bad.slice", (d / "x").string(), false, out, err) == kExitValidation);
  CHECK(cmd_slice(kConfigs / "clipped1d.cfg", d / "missing.slice", (d / "x").string(), false, out, err) == kExitIo);
  CHECK(cmd_slice(kConfigs / "clipped1d.cfg", kData / "tiny.slice", (d / "no_dir" / "x").string(), false, out, err) ==
        kExitIo);
}

TEST_CASE("verify writes its report and refuses large n without residual-only") {
  const fs::path d = scratch("verify");
  fs::copy_file(kConfigs / "quad1d.cfg", d / "quad1d.cfg");
  std::ostringstream out, err;
  CHECK(cmd_verify(d / "quad1d.cfg", 20, 1, false, std::nullopt, out, err) == kExitOk);
  CHECK(fs::exists(d / "quad1d.verify.txt"));
  const std::string kv = slurp(d / "quad1d.verify.kv");
  CHECK(kv.find("pass=1") != std::string::npos);

  std::ostringstream o2, e2;
  CHECK(cmd_verify(kConfigs / "quad10d.cfg", 5, 1, false, d / "r", o2, e2) == kExitValidation);
  CHECK(e2.str().find("residual-only") != std::string::npos);
  std::ostringstream o3, e3;
  CHECK(cmd_verify(kConfigs / "quad10d.cfg", 5, 1, true, d / "r", o3, e3) == kExitOk);
  CHECK(fs::exists(d / "r.kv"));
}

TEST_CASE("bench CSV") {
  std::ostringstream out, err;
  CHECK(cmd_bench("arch2", {1, 4}, 0, 1, std::nullopt, out, err) == kExitOk);
  const auto rows = csv_rows(out.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"n", "m", "mean_eval_seconds"});
  CHECK(rows[1][0] == "1");
  CHECK(rows[1][1] == "2");
  CHECK(rows[2][1] == "8");
  std::ostringstream o2, e2;
  CHECK(cmd_bench("arch3", {1}, 0, 1, std::nullopt, o2, e2) == kExitValidation);
}
