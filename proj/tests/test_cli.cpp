#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pellben/cli.hpp"

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = pellben::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("unit subcommand emits the fundamental unit with its CF data") {
    CliResult r = run({"unit", "29"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"d\":29,\"a0\":5,\"period\":[2,1,1,2,10],\"unit\":{\"x\":\"9801\",\"y\":\"1820\"}}\n");

    CliResult r2 = run({"unit", "2"});
    CHECK(r2.status == 0);
    CHECK(r2.out == "{\"d\":2,\"a0\":1,\"period\":[2],\"unit\":{\"x\":\"3\",\"y\":\"2\"}}\n");
}

TEST_CASE("orbits subcommand") {
    CliResult r = run({"orbits", "77", "-13"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"d\":77,\"k\":-13,\"orbits\":[{\"x\":\"8\",\"y\":\"1\",\"ambiguous\":false,"
          "\"conjugate_of\":1},{\"x\":\"-8\",\"y\":\"1\",\"ambiguous\":false,"
          "\"conjugate_of\":0}]}\n");
}

TEST_CASE("domain errors exit with status 1") {
    CliResult empty = run({"orbits", "2", "3"});
    CHECK(empty.status == 1);
    CHECK(empty.out.empty());
    CHECK(empty.err.find("norm class empty") != std::string::npos);

    CliResult square = run({"unit", "4"});
    CHECK(square.status == 1);
    CHECK(square.err.find("perfect square") != std::string::npos);

    CliResult zero_k = run({"orbits", "2", "0"});
    CHECK(zero_k.status == 1);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({"orbits"}).status == 2);
    CHECK(run({"frobnicate", "1"}).status == 2);
    CHECK(run({"seq", "77", "-13", "-N", "2", "--variant", "t9"}).status == 2);
    CHECK(run({"seq", "77", "-13"}).status == 2);  // missing -N
    CHECK(run({"benford", "77"}).status == 2);     // k and -N missing
    CHECK(run({"roots-check"}).status == 2);
    CHECK(run({}).status == 2);
}

TEST_CASE("help exits with status 0") {
    CliResult r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("orbits") != std::string::npos);
}

TEST_CASE("seq subcommand emits CSV terms") {
    CliResult r = run({"seq", "77", "-13", "--orbit", "0", "--variant", "t1", "-N", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "n,x,y\n1,5888,671\n2,4133368,471041\n");

    CliResult t3 = run({"seq", "29", "140", "--variant", "t3", "-N", "1"});
    CHECK(t3.status == 0);
    CHECK(t3.out == "n,x,y\n1,-180193,-33461\n");

    CliResult bad_orbit = run({"seq", "77", "-13", "--orbit", "5", "--variant", "t1", "-N", "2"});
    CHECK(bad_orbit.status == 1);
    CHECK(bad_orbit.err.find("out of range") != std::string::npos);
}

TEST_CASE("enumerate subcommand") {
    CliResult r = run({"enumerate", "2", "1", "-N", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "m,X,Y\n1,3,2\n2,3,-2\n3,-3,-2\n4,-3,2\n5,17,12\n6,17,-12\n7,-17,-12\n8,-17,12\n");

    CliResult seeded = run({"enumerate", "2", "1", "-N", "1", "--include-seeds"});
    CHECK(seeded.status == 0);
    CHECK(seeded.out == "m,X,Y\n1,1,0\n2,-1,0\n3,3,2\n4,3,-2\n5,-3,-2\n6,-3,2\n");
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"orbits", "29", "140"},
          std::vector<std::string>{"benford", "2", "1", "-N", "50", "--format", "json"},
          std::vector<std::string>{"benford", "2", "1", "-N", "50", "--format", "csv"}}) {
        CliResult first = run(args);
        CliResult second = run(args);
        CHECK(first.status == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("threads flag does not change output") {
    CliResult seq = run({"orbits", "29", "140"});
    CliResult par = run({"orbits", "29", "140", "--threads", "4"});
    CHECK(par.status == 0);
    CHECK(par.out == seq.out);
}

TEST_CASE("benford report round-trips through CSV files") {
    auto csv_path = temp_file("pellben_test_enumeration.csv");
    CliResult gen = run({"enumerate", "77", "-13", "-N", "50", "-o", csv_path.string()});
    REQUIRE(gen.status == 0);

    CliResult from_file =
        run({"benford", "--from-file", csv_path.string(), "--column", "X", "-m", "1"});
    CliResult fused = run({"benford", "77", "-13", "-N", "50", "--component", "x", "-m", "1"});
    CHECK(from_file.status == 0);
    CHECK(fused.status == 0);
    CHECK(from_file.out == fused.out);

    // same through a single orbit window and in JSON
    auto seq_path = temp_file("pellben_test_window.csv");
    REQUIRE(run({"seq", "77", "-13", "--orbit", "1", "--variant", "t2", "-N", "40", "-o",
                 seq_path.string()})
                .status == 0);
    CliResult window_file = run({"benford", "--from-file", seq_path.string(), "--column", "y",
                                 "--format", "json"});
    CliResult window_fused = run({"benford", "77", "-13", "--orbit", "1", "--variant", "t2",
                                  "-N", "40", "--component", "y", "--format", "json"});
    CHECK(window_file.status == 0);
    CHECK(window_file.out == window_fused.out);

    std::filesystem::remove(csv_path);
    std::filesystem::remove(seq_path);

    CliResult missing = run({"benford", "--from-file", "/nonexistent/file.csv"});
    CHECK(missing.status == 1);
    CliResult bad_col =
        run({"benford", "77", "-13", "-N", "5", "--from-file", "also-bad"});
    CHECK(bad_col.status == 2);  // both modes at once
}

TEST_CASE("benford output formats") {
    CliResult csv = run({"benford", "2", "1", "-N", "250", "-m", "1"});
    REQUIRE(csv.status == 0);
    CHECK(csv.out.rfind("pattern,count,frequency,expected,deviation\n", 0) == 0);
    CHECK(csv.out.find("\nN,max_abs_dev,chi_square,star_discrepancy\n") != std::string::npos);
    // 9 pattern rows + 2 header lines + summary line
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 12);

    CliResult json = run({"benford", "2", "1", "-N", "250", "-m", "2", "--format", "json"});
    REQUIRE(json.status == 0);
    CHECK(json.out.rfind("{\"n\":", 0) == 0);
    CHECK(json.out.find("\"max_abs_dev\":") != std::string::npos);
}

TEST_CASE("roots-check subcommand") {
    CliResult r = run({"roots-check", "29"});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"unit\":{\"x\":\"9801\",\"y\":\"1820\"},\"ok\":true}\n");

    CliResult powered = run({"roots-check", "2", "--unit-power", "3"});
    CHECK(powered.status == 0);
    CHECK(powered.out == "{\"unit\":{\"x\":\"99\",\"y\":\"70\"},\"ok\":true}\n");

    CliResult elem = run({"roots-check", "--element", "3+2*sqrt(2)"});
    CHECK(elem.status == 0);
    CHECK(elem.out.find("\"ok\":true") != std::string::npos);

    CliResult not_unit = run({"roots-check", "--element", "5+2*sqrt(2)"});
    CHECK(not_unit.status == 1);
}

TEST_CASE("output redirection writes the same bytes") {
    auto path = temp_file("pellben_test_unit.json");
    CliResult direct = run({"unit", "61"});
    CliResult filed = run({"unit", "61", "-o", path.string()});
    REQUIRE(filed.status == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    std::filesystem::remove(path);
}
