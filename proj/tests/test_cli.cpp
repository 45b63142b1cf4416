#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holo/angleform.hpp"
#include "holo/cli.hpp"
#include "holo/errors.hpp"

using namespace holo;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("holo-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int counter() {
    static int c = 0;
    return c++;
  }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("angle parsing") {
  CHECK(parse_angle("30deg") == doctest::Approx(kTau / 12).epsilon(1e-14));
  CHECK(parse_angle("1.5rad") == doctest::Approx(1.5));
  CHECK(parse_angle("1/12tau") == doctest::Approx(kTau / 12).epsilon(1e-15));
  CHECK(parse_angle("0.25tau") == doctest::Approx(kTau / 4).epsilon(1e-15));
  CHECK_THROWS_AS(parse_angle("12furlong"), ParseError);
}

TEST_CASE("check subcommand") {
  std::string text;
  int code = run({"check", "morley", "--a", "30deg", "--b", "20deg", "--c", "10deg"}, &text);
  CHECK(code == 0);
  CHECK(text.find("exists") != std::string::npos);
}

TEST_CASE("check rejects bad constraint") {
  std::string text;
  int code = run({"check", "morley", "--a", "30deg", "--b", "30deg", "--c", "30deg"}, &text);
  CHECK(code == 4);  // constraint violation surfaces as a domain error
}

TEST_CASE("unknown subcommand and unknown name") {
  CHECK(run({"frobnicate"}) == 2);
  CHECK(run({"check", "unknown-name", "--a", "30deg", "--b", "20deg", "--c", "10deg"}) == 2);
}

TEST_CASE("identity subcommand") {
  std::string text;
  int code = run({"identity", "--n", "8", "--grid", "200"}, &text);
  CHECK(code == 0);
  CHECK(text.find("max residual") != std::string::npos);
}

TEST_CASE("search exit codes") {
  TempDir dir;
  auto json_path = (dir.path / "s.json").string();
  SUBCASE("found solutions exit 0") {
    int code = run({"search", "--n", "4", "--max-num", "1", "--max-fill", "1", "--out-path",
                    json_path});
    CHECK(code == 0);
    CHECK(slurp(json_path).find("\"solutions\"") != std::string::npos);
  }
  SUBCASE("exhaustive empty exits 3") {
    int code = run({"search", "--n", "5", "--out-path", json_path});
    CHECK(code == 3);
  }
  SUBCASE("absent hole exits 4") {
    int code = run({"search", "--n", "2", "--out-path", json_path});
    CHECK(code == 4);
  }
}

TEST_CASE("doughnut subcommand writes svg") {
  TempDir dir;
  auto svg_path = (dir.path / "d.svg").string();
  int code = run({"doughnut", "--n", "6", "--a", "1/36tau", "--b", "1/36tau", "--c", "1/36tau",
                  "--out", "svg", "--out-path", svg_path});
  CHECK(code == 0);
  std::string svg = slurp(svg_path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("class=\"hole\"") != std::string::npos);
}

TEST_CASE("fill below n=5 is a domain error") {
  int code = run({"doughnut", "--n", "4", "--a", "1/24tau", "--b", "1/48tau", "--c", "1/48tau",
                  "--fill"});
  CHECK(code == 4);
}

TEST_CASE("pack subcommand") {
  TempDir dir;
  auto json_path = (dir.path / "p.json").string();
  int code = run({"pack", "--s", "1.1", "--t", "0.95", "--rows", "3", "--cols", "3",
                  "--out-path", json_path});
  CHECK(code == 0);
  CHECK(slurp(json_path).find("\"circles\"") != std::string::npos);
}

TEST_CASE("flipbook writes zero-padded frames") {
  TempDir dir;
  int code = run({"flipbook", "--from", "4", "--to", "2", "--out-dir", dir.path.string()});
  CHECK(code == 0);
  CHECK(std::filesystem::exists(dir.path / "flip-04.svg"));
  CHECK(std::filesystem::exists(dir.path / "flip-03.svg"));
  CHECK(std::filesystem::exists(dir.path / "flip-02.svg"));
}

TEST_CASE("repeated runs are byte identical") {
  TempDir dir;
  auto p1 = (dir.path / "a.json").string();
  auto p2 = (dir.path / "b.json").string();
  CHECK(run({"--seed", "11", "search", "--n", "4", "--max-num", "1", "--max-fill", "1",
             "--out-path", p1}) == 0);
  CHECK(run({"--seed", "11", "search", "--n", "4", "--max-num", "1", "--max-fill", "1",
             "--out-path", p2}) == 0);
  CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("check accepts a spec file from disk") {
  TempDir dir;
  auto spec_path = dir.path / "bis.json";
  {
    std::ofstream f(spec_path);
    f << R"json({
      "n": 2,
      "triangles": [
        {"id": "t1", "angles": ["a", "b", "c + 1/4*tau"]},
        {"id": "t2", "angles": ["b", "c", "a + 1/4*tau"]},
        {"id": "t3", "angles": ["c", "a", "b + 1/4*tau"]}
      ],
      "gluings": [["t1",0,"t2",1],["t2",0,"t3",1],["t3",0,"t1",1]],
      "interior_vertices": [[["t1",2],["t2",2],["t3",2]]],
      "metadata": {"name": "file-spec", "figure": "incenter subdivision"}
    })json";
  }
  std::string text;
  int code = run({"check", spec_path.string(), "--a", "40deg", "--b", "30deg", "--c", "20deg"},
                 &text);
  CHECK(code == 0);
  CHECK(text.find("exists") != std::string::npos);
}
