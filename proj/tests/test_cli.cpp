#include <doctest.h>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "wythoff/table_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "wythoff");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = wythoff::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  const auto ls = lines(text);
  return std::find(ls.begin(), ls.end(), line) != ls.end();
}

nlohmann::json report_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("grundy subcommand") {
  const Result r = run({"grundy", "--family", "wk", "--k", "1", "--n", "5", "--format", "csv"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 22);
  CHECK(ls.front() == "a,b,g");
  CHECK(has_line(r.out, "2,2,1"));
  CHECK(r.out.back() == '\n');

  const Result zero = run({"grundy", "--family", "tinf", "--n", "0"});
  CHECK(zero.code == 0);
  CHECK(zero.out == "a,b,g\n0,0,0\n");

  CHECK(run({"grundy", "--family", "wkl", "--k", "5", "--l", "3"}).code == 2);
  CHECK(run({"grundy", "--family", "nope"}).code == 2);
  CHECK(run({"grundy", "--format", "xml"}).code == 2);
  CHECK(run({"grundy", "--n", "100000"}).code == 2);

  const Result json = run({"grundy", "--family", "wythoff", "--n", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(json.out) ==
        nlohmann::json::parse("[[0,0,0],[0,1,1],[0,2,2],[1,1,2],[1,2,0],[2,2,1]]"));

  const Result p = run({"grundy", "--family", "tk", "--k", "3", "--n", "8", "--g", "0"});
  CHECK(p.out == "a,b,g\n0,0,0\n1,1,0\n2,3,0\n4,6,0\n5,8,0\n");
}

TEST_CASE("CSV tables round-trip byte for byte") {
  const Result r = run({"grundy", "--family", "wkprime", "--k", "2", "--n", "25"});
  REQUIRE(r.code == 0);
  // parse rows back into a table and print again
  std::ostringstream rebuilt;
  rebuilt << "a,b,g\n";
  std::vector<std::array<unsigned, 3>> rows;
  for (const auto& line : lines(r.out)) {
    if (line == "a,b,g") continue;
    std::array<unsigned, 3> row{};
    char c1 = 0;
    char c2 = 0;
    std::istringstream ls(line);
    REQUIRE(static_cast<bool>(ls >> row[0] >> c1 >> row[1] >> c2 >> row[2]));
    rows.push_back(row);
  }
  for (const auto& row : rows) rebuilt << row[0] << ',' << row[1] << ',' << row[2] << '\n';
  CHECK(rebuilt.str() == r.out);
}

TEST_CASE("verify subcommand exit codes") {
  Result r = run({"verify", "--theorem", "thm3", "--k", "0", "--n", "100"});
  CHECK(r.code == 0);
  CHECK(report_of(r)["status"] == "verified");
  CHECK(run({"verify", "--theorem", "thm7", "--k", "2", "--l", "2", "--n", "100"}).code == 0);
  r = run({"verify", "--theorem", "thm6", "--k", "0", "--n", "100"});
  CHECK(r.code == 0);
  CHECK(report_of(r)["subject"] == "thm6");
  CHECK(run({"verify", "--theorem", "thm9", "--k", "inf", "--n", "50"}).code == 0);
  CHECK(run({"verify", "--theorem", "thm7", "--k", "3", "--l", "1"}).code == 2);
  CHECK(run({"verify", "--theorem", "thm42"}).code == 2);
  CHECK(run({"verify", "--theorem", "thm3", "--k", "minus"}).code == 2);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("conjecture subcommand exit codes") {
  Result r = run({"conjecture", "--id", "c3", "--k", "2", "--l", "4", "--n", "80"});
  CHECK(r.code == 0);
  CHECK(report_of(r)["status"] == "consistent-up-to-bound");
  CHECK(run({"conjecture", "--id", "c2a", "--k", "0", "--n", "80"}).code == 0);
  CHECK(run({"conjecture", "--id", "c1", "--k", "3", "--kprime", "2", "--l", "4"}).code == 2);
}

TEST_CASE("closeness and paper-values subcommands") {
  Result r = run({"closeness", "--k", "1", "--l", "3", "--n", "60"});
  CHECK(r.code == 0);
  CHECK(report_of(r)["subject"] == "closeness");
  r = run({"closeness", "--k", "0", "--l", "4", "--n", "60"});
  CHECK(r.code == 0);
  CHECK(report_of(r)["subject"] == "coincidence");
  CHECK(run({"closeness", "--k", "3", "--l", "3"}).code == 2);

  r = run({"paper-values"});
  CHECK(r.code == 0);
  CHECK(report_of(r)["details"]["values"][0]["actual"] == 38);
}

TEST_CASE("beatty, moves and pvs subcommands") {
  Result r = run({"beatty", "--count", "5"});
  CHECK(r.out == "n,A_n,B_n\n0,0,0\n1,1,2\n2,3,5\n3,4,7\n4,6,10\n");

  r = run({"moves", "--family", "tk", "--k", "0", "--a", "5", "--b", "10"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "diagonal,1,4,9"));
  CHECK(has_line(r.out, "diagonal,2,3,8"));
  CHECK_FALSE(has_line(r.out, "diagonal,3,2,7"));
  CHECK(lines(r.out).size() == 1 + 15 + 2);

  r = run({"moves", "--family", "wythoff", "--a", "2", "--b", "2"});
  // (0,2),(1,2) once each, then two diagonal moves
  CHECK(r.out == "kind,s,a,b\nnim-first,1,1,2\nnim-first,2,0,2\ndiagonal,1,1,1\ndiagonal,2,0,0\n");

  r = run({"pvs", "--formula", "p_wk", "--k", "1", "--n", "8"});
  CHECK(r.out == "a,b\n0,0\n1,1\n2,3\n4,6\n5,8\n");
  r = run({"pvs", "--formula", "s1_wk_odd", "--k", "3", "--n", "6", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse("[[0,1],[2,3],[4,4],[5,6]]"));
  CHECK(run({"pvs", "--formula", "s1_wk_odd", "--k", "2"}).code == 2);
  CHECK(run({"pvs", "--formula", "p_wk_recursion", "--k", "0", "--l", "0"}).code == 2);
}

TEST_CASE("output file and cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "wythoff_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto file = dir / "table.csv";
  const Result r = run({"--cache-dir", (dir / "cache").string(), "grundy", "--family", "tk",
                        "--k", "2", "--n", "12", "--output", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(file);
  std::string first;
  std::getline(in, first);
  CHECK(first == "a,b,g");
  CHECK(std::filesystem::exists(dir / "cache" /
                                wythoff::table_file_name(wythoff::RulesetSpec::tk(2), 12)));
  std::filesystem::remove_all(dir);
}

TEST_CASE("help and bad invocations") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("play announces values and plays legal winning moves") {
  Result r = run({"play", "--family", "tk", "--k", "0", "--a", "1", "--b", "1"}, "");
  CHECK(r.code == 0);
  CHECK(r.out.find("P-position") != std::string::npos);

  r = run({"play", "--family", "wk", "--k", "0", "--a", "1", "--b", "2"}, "");
  CHECK(r.out.find("P-position") != std::string::npos);

  r = run({"play", "--family", "wk", "--k", "1", "--a", "0", "--b", "0"}, "");
  CHECK(r.out.find("no moves; previous player wins") != std::string::npos);

  // From (1,1) in T_0 the human can only go to (0,1); the engine then takes the last token.
  r = run({"play", "--family", "tk", "--k", "0", "--a", "1", "--b", "1"}, "0 0\n0 1\n");
  CHECK(r.out.find("illegal move (1,1) -> (0,0)") != std::string::npos);
  CHECK(r.out.find("engine moves (0,1) -> (0,0)") != std::string::npos);
  CHECK(r.out.find("previous player wins (engine)") != std::string::npos);

  // Human from (3,3) in Wythoff takes everything and wins.
  r = run({"play", "--family", "wythoff", "--a", "3", "--b", "3"}, "0 0\n");
  CHECK(r.out.find("N-position") != std::string::npos);
  CHECK(r.out.find("previous player wins (you)") != std::string::npos);

  // Garbage input re-prompts.
  r = run({"play", "--family", "wythoff", "--a", "3", "--b", "5"}, "hello\n3 2\n");
  CHECK(r.out.find("enter two nonnegative pile sizes") != std::string::npos);
  CHECK(r.out.find("engine moves (2,3) -> (1,2)") != std::string::npos);
}
