#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <regex>
#include <string>

#include "zlocus/report.hpp"

#ifndef ZLOCUS_CLI_PATH
#error "ZLOCUS_CLI_PATH must point at the command-line tool"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ZLOCUS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

using nlohmann::json;

}  // namespace

TEST_CASE("expand prints P_0..P_m and checks the closed form") {
  const Run r = run("expand --quad 1,1,-2 --m 3 --check");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["coefficients"].size() == 4);
  CHECK(j["coefficients"][0] == json::parse("[[-1,2]]"));
  CHECK(j["coefficients"][1] == json::parse("[[-1,4],[-1,2]]"));
  CHECK(run("expand --quad 1,1,-1 --m-max 20 --check").status == 0);
}

TEST_CASE("expand rejects c = 0 with exit code 2") {
  CHECK(run("expand --quad 1,1,0 --m 3").status == 2);
}

TEST_CASE("expand handles the geometric case a = b = 0") {
  const Run r = run("expand --quad 0,0,3 --m 2");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["coefficients"][2] == json::parse("[[0,1],[0,1],[1,3]]"));
}

TEST_CASE("argument errors exit with code 2") {
  CHECK(run("").status == 2);
  CHECK(run("expand --m 3").status == 2);
  CHECK(run("expand --quad 1,2 --m 3").status == 2);
  CHECK(run("expand --quad 1,x,2 --m 3").status == 2);
  CHECK(run("roots --quad 1,1,-2 --m 3 --ms 4,5").status == 2);
  CHECK(run("roots --quad 1,1,-2").status == 2);
  CHECK(run("verify --quad 1,5,6 --m-max 5 --format svg").status == 2);
  CHECK(run("roots --quad 1,1,-2 --m 3 --tol 0").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("verify passes for both proven cases") {
  Run r = run("verify --quad 1,5,6 --m-max 60");
  CHECK(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j.size() == 60);
  for (const auto& v : j) CHECK(v["satisfied"] == true);
  r = run("verify --quad 1,1,-2 --m-max 60");
  CHECK(r.status == 0);
}

TEST_CASE("verify refuses the complex-root case unless exploring") {
  CHECK(run("verify --quad 1,1,2 --m-max 10").status == 2);
  const Run r = run("verify --quad 1,1,2 --m-max 10 --explore");
  CHECK(r.status == 0);
  CHECK(json::parse(r.out).size() == 10);
}

TEST_CASE("midpoint exclusion report") {
  const Run r = run("verify --quad 1,1,-2 --m-max 40 --midpoint");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["exclusion_radius"].get<double>() == 0.75);
  CHECK(j["n_observed"].get<int>() < 40);
}

TEST_CASE("non-convergence exits with code 3") {
  CHECK(run("roots --quad 1,1,-2 --m 40 --max-iter 1").status == 3);
  CHECK(run("verify --quad 1,1,-2 --m-max 40 --max-iter 1").status == 3);
}

TEST_CASE("roots CSV round-trips through the parser") {
  const Run r = run("roots --quad 2,-3,-5 --ms 7,20 --format csv");
  REQUIRE(r.status == 0);
  const auto rows = zlocus::parse_roots_csv(r.out);
  CHECK(rows.size() == 27);
  std::string rebuilt = "m,re,im,residual\n";
  for (const auto& row : rows)
    rebuilt += std::to_string(row.m) + "," + zlocus::format_double(row.re) + "," + zlocus::format_double(row.im) + "," +
               zlocus::format_double(row.residual) + "\n";
  CHECK(rebuilt == r.out);
}

TEST_CASE("output can go to a file") {
  const std::string path = "cli_test_output.json";
  std::remove(path.c_str());
  CHECK(run("limit --quad 1,1,-2 --ms 15,30 --out " + path).status == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string text;
  for (int c = std::fgetc(f); c != EOF; c = std::fgetc(f)) text += static_cast<char>(c);
  std::fclose(f);
  std::remove(path.c_str());
  const json j = json::parse(text);
  CHECK(j["radius"] == 1.0);
  CHECK(j["entries"].size() == 2);
}

TEST_CASE("classic subcommands") {
  Run r = run("classic fibonacci --m-max 10");
  CHECK(r.status == 0);
  CHECK(json::parse(r.out) == json::parse("[0,1,1,2,3,5,8,13,21,34,55]"));
  r = run("classic chebyshev --ms 2");
  CHECK(json::parse(r.out)["coefficients"][0] == json::parse("[[-1,1],[0,1],[4,1]]"));
  CHECK(run("classic gm --m-max 40").status == 0);
  CHECK(run("classic jm --m-max 60").status == 0);
  r = run("classic szego --n 15,30,50 --format csv");
  CHECK(r.status == 0);
  CHECK(zlocus::parse_roots_csv(r.out).size() == 95);
  CHECK(run("classic szego --n 0").status == 2);
}

TEST_CASE("annulus subcommand") {
  Run r = run("annulus --coeffs 1,2,4 --check");
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["r_min"] == 0.5);
  CHECK(run("annulus --coeffs 1,-1,1").status == 2);
  r = run("annulus --coeffs 1,-1,1 --signed --check");
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["r_max"] == 1.0);
  CHECK(run("annulus --coeffs 1,-2,-3 --signed").status == 2);
}

TEST_CASE("SVG figures are deterministic and carry the CSV coordinates") {
  const Run svg = run("limit --quad 1,1,-2 --ms 15,30,100 --format svg");
  const Run again = run("limit --quad 1,1,-2 --ms 15,30,100 --format svg");
  const Run csv = run("limit --quad 1,1,-2 --ms 15,30,100 --format csv");
  REQUIRE(svg.status == 0);
  CHECK(svg.out == again.out);
  const std::regex point("data-m=\"(\\d+)\" data-re=\"([^\"]+)\" data-im=\"([^\"]+)\"");
  std::string joined;
  for (auto it = std::sregex_iterator(svg.out.begin(), svg.out.end(), point); it != std::sregex_iterator(); ++it)
    joined += (*it)[1].str() + "," + (*it)[2].str() + "," + (*it)[3].str() + "\n";
  std::string expected;
  for (const auto& row : zlocus::parse_roots_csv(csv.out))
    expected += std::to_string(row.m) + "," + zlocus::format_double(row.re) + "," + zlocus::format_double(row.im) + "\n";
  CHECK(joined == expected);
  CHECK(std::count(svg.out.begin(), svg.out.end(), '\n') > 145);
}
