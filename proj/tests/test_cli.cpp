#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "renorm/cli.hpp"

using namespace renorm;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str()};
}

std::string fixture(const std::string& name) {
  return std::string(RENORM_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("circuit-solve on the triangle fixture") {
  CliResult r = run_cli({"circuit-solve", fixture("triangle.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(r.out.find("\"total-conductance\"") != std::string::npos);
  CHECK(r.out.find("1.5") != std::string::npos);
}

TEST_CASE("hubbard-expansion passes on the period-2 fixture") {
  CliResult r = run_cli({"hubbard-expansion", fixture("period2_basic.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"law\": \"expansion\"") != std::string::npos);
}

TEST_CASE("wad-check fails clause c on the inflated-target fixture") {
  CliResult r = run_cli({"wad-check", fixture("cert_inflated_v.json")});
  CHECK(r.code == 1);
  CHECK(r.out.find("\"verdict\": \"fail\"") != std::string::npos);
  CHECK(r.out.find("\"name\": \"clause-c\", \"law\": \"domination-certificate\", "
                   "\"expected\": 0, \"actual\": 1") != std::string::npos);
}

TEST_CASE("wad-check names the right clause for every mutation fixture") {
  struct Case {
    const char* file;
    char clause;
  };
  for (Case c : {Case{"cert_deflated_w.json", 'c'}, Case{"cert_missing_support.json", 'a'},
                 Case{"cert_crossing.json", 'e'}, Case{"cert_no_arrow.json", 'd'}}) {
    CliResult r = run_cli({"wad-check", fixture(c.file)});
    INFO(c.file);
    CHECK(r.code == 1);
    std::string needle = std::string("\"name\": \"clause-") + c.clause +
                         "\", \"law\": \"domination-certificate\", \"expected\": 0, \"actual\": 1";
    CHECK(r.out.find(needle) != std::string::npos);
  }
  CliResult ok = run_cli({"wad-check", fixture("cert_valid.json")});
  CHECK(ok.code == 0);
}

TEST_CASE("malformed json exits 2 with line and column") {
  std::string path = "/tmp/renorm_bad_fixture.json";
  {
    std::ofstream f(path);
    f << "{\n  \"vertices\": [,]\n}\n";
  }
  CliResult r = run_cli({"circuit-solve", path});
  CHECK(r.code == 2);
  CHECK(r.out.find("\"verdict\": \"error\"") != std::string::npos);
  CHECK(r.out.find("line 2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("missing file exits 2") {
  CliResult r = run_cli({"circuit-solve", "/nonexistent/nope.json"});
  CHECK(r.code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"circuit-laws", "--count", "40", "--seed", "77"},
        std::vector<std::string>{"circuit-solve", fixture("triangle.json")},
        std::vector<std::string>{"hubbard-constants", "--p", "2", "--n", "2"}}) {
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
  }
}

TEST_CASE("different seeds change the provenance but not determinism") {
  CliResult a = run_cli({"circuit-laws", "--count", "10", "--seed", "1"});
  CliResult b = run_cli({"circuit-laws", "--count", "10", "--seed", "2"});
  CHECK(a.out.find("\"seed\": 1") != std::string::npos);
  CHECK(b.out.find("\"seed\": 2") != std::string::npos);
}

TEST_CASE("hubbard-validate names violated axioms and exits 1") {
  CliResult r = run_cli({"hubbard-validate", fixture("invalid_valence.json")});
  CHECK(r.code == 1);
  CHECK(r.out.find("\"name\": \"valence\"") != std::string::npos);
  CliResult ok = run_cli({"hubbard-validate", fixture("period2_basic.json")});
  CHECK(ok.code == 0);
}

TEST_CASE("multi-file runs prefix check names and honor --jobs") {
  CliResult r = run_cli({"hubbard-validate", "--jobs", "2", fixture("period2_basic.json"),
                         fixture("period3_twoarc.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("period2_basic.json:") != std::string::npos);
  CHECK(r.out.find("period3_twoarc.json:") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  std::string path = "/tmp/renorm_report_test.json";
  CliResult r = run_cli({"--out", path, "hex", "--a", "1", "--b", "1", "--c", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str().find("1.70491283235801") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("RENORM_FIXTURES resolves relative input paths") {
  setenv("RENORM_FIXTURES", RENORM_FIXTURE_DIR, 1);
  CliResult r = run_cli({"circuit-solve", "triangle.json"});
  unsetenv("RENORM_FIXTURES");
  CHECK(r.code == 0);
}

TEST_CASE("dickson subcommand reports the basis") {
  CliResult r = run_cli({"dickson", fixture("dickson_small.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("(0,5)") != std::string::npos);
  CHECK(r.out.find("(1,2)") != std::string::npos);
  CHECK(r.out.find("(2,1)") != std::string::npos);
  CHECK(r.out.find("(4,0)") != std::string::npos);
  CHECK(r.out.find("(2,2)") == std::string::npos);
}

TEST_CASE("wad-strip re-verifies the stripped certificate") {
  CliResult r = run_cli({"wad-strip", fixture("strip_simple.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("stripped-certificate") != std::string::npos);
}

TEST_CASE("converge emits a csv table") {
  std::string csv = "/tmp/renorm_converge.csv";
  CliResult r = run_cli({"converge", fixture("rect2.json"), "--resolutions", "8", "16",
                         "--csv", csv});
  CHECK(r.code == 0);
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  CHECK(header == "resolution,estimate,delta");
  std::string row;
  std::getline(f, row);
  CHECK(row.substr(0, 2) == "8,");
  std::remove(csv.c_str());
}

TEST_CASE("grid-width annulus flag") {
  CliResult r = run_cli({"grid-width", "--annulus", fixture("annulus_12x4.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"annulus-width\"") != std::string::npos);
  CHECK(r.out.find("\"name\": \"uniform-exactness\"") != std::string::npos);
}
