#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <variant>

#include "mpd/cli.hpp"
#include "mpd/io.hpp"
#include "mpd/verify.hpp"

using namespace mpd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MPD_TEST_DATA) + "/" + name; }

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "mpd_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve") {
  auto k2 = run({"solve", "--cotree", data("k2.ct"), "--restricted", "0,1"});
  CHECK(k2.code == cli::kOk);
  CHECK(k2.out == "beta 2\nkfs 1 0 0\npair 0 1 full\n");

  auto p4 = run({"solve", "--graph", data("p4.g")});
  CHECK(p4.code == cli::kNotCograph);
  CHECK(p4.out == "p4 0 1 2 3\n");

  auto iso = run({"solve", "--cotree", data("union2.ct")});
  CHECK(iso.code == cli::kNoSolution);
  CHECK(iso.out == "isolated 0 1\n");

  auto via_graph = run({"solve", "--graph", data("c4.g"), "--restricted", "0"});
  CHECK(via_graph.code == cli::kOk);
  CHECK(via_graph.out.rfind("beta 1\nkfs 0 1 0\n", 0) == 0);

  auto from_file = run({"solve", "--cotree", data("no_witness.ct"), "--restricted", data("no_witness.restricted")});
  CHECK(from_file.code == cli::kOk);
  CHECK(from_file.out.rfind("beta 3\nkfs 1 1 0\n", 0) == 0);

  CHECK(run({"solve", "--cotree", data("missing.ct")}).code == cli::kInputError);
  CHECK(run({"solve", "--cotree", data("k2.ct"), "--restricted", "0,9"}).code == cli::kInputError);
  CHECK(run({"solve", "--cotree", data("k2.ct"), "--graph", data("k2.g")}).code == cli::kInputError);
  CHECK(run({"solve"}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
}

TEST_CASE("verify") {
  auto ok = run({"verify", "--graph", data("k2.g"), "--restricted", "0,1", "--solution", data("k2_full.sol")});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("certificate all-restricted-matched") != std::string::npos);

  auto bad = run({"verify", "--graph", data("p3.g"), "--solution", data("p3_non_edge.sol")});
  CHECK(bad.code == cli::kVerifyFailed);
  CHECK(bad.out.find("reason not-an-edge 0 2") != std::string::npos);

  auto stale = run({"verify", "--cotree", data("k2.ct"), "--restricted", "0,1", "--solution", data("k2_stale.sol")});
  CHECK(stale.code == cli::kVerifyFailed);
  CHECK(stale.out.find("reason stats-mismatch") != std::string::npos);

  auto wrong_class = run({"verify", "--graph", data("k2.g"), "--restricted", "0", "--solution", data("k2_full.sol")});
  CHECK(wrong_class.code == cli::kVerifyFailed);

  CHECK(run({"verify", "--graph", data("k2.g"), "--solution", data("malformed.sol")}).code == cli::kInputError);
}

TEST_CASE("oracle") {
  auto q3 = run({"oracle", "--graph", data("q3.g"), "--gamma-p"});
  CHECK(q3.code == cli::kOk);
  CHECK(q3.out == "gamma_p 4\n");

  auto k3 = run({"oracle", "--graph", data("k3.g"), "--restricted", "0,1,2"});
  CHECK(k3.code == cli::kOk);
  CHECK(k3.out.rfind("beta 2 fmin 0\n", 0) == 0);

  auto k2 = run({"oracle", "--cotree", data("k2.ct"), "--reference-oracle"});
  CHECK(k2.out.rfind("beta 0 fmin 1\n", 0) == 0);

  // The oracle's witness block is itself a readable solution file.
  auto parsed = parse_solution(k3.out);
  CHECK(parsed.fmin == 0);
  CHECK(parsed.beta == 2);

  CHECK(run({"oracle", "--graph", data("q3.g"), "--cap", "7"}).code == cli::kInputError);
}

TEST_CASE("gen") {
  auto one = run({"gen", "-n", "1", "--seed", "7"});
  CHECK(one.code == cli::kOk);
  CHECK(one.out.substr(0, 2) == "0\n");

  auto dense = run({"gen", "-n", "100", "--join-bias", "1.0", "--seed", "1"});
  CHECK(dense.code == cli::kOk);
  const std::string tree_text = dense.out.substr(0, dense.out.find('\n'));
  CHECK(materialized_edge_count(parse_cotree(tree_text)) == 100 * 99 / 2);
  CHECK(tree_text.find('+') == std::string::npos);

  CHECK(run({"gen", "-n", "100", "--join-bias", "1.0", "--seed", "1"}).out == dense.out);
  CHECK(run({"gen", "-n", "0"}).code == cli::kInputError);
  CHECK(run({"gen", "-n", "5", "--density", "1.5"}).code == cli::kInputError);

  const auto base = (scratch_dir() / "gen").string();
  CHECK(run({"gen", "-n", "12", "--seed", "3", "-o", base}).code == cli::kOk);
  CHECK(parse_cotree(read_file(base + ".cotree")).leaf_count() == 12);
  CHECK(parse_restricted(read_file(base + ".restricted"), 12).universe() == 12);
}

TEST_CASE("bench output format") {
  auto two = run({"bench", "--sizes", "1000,10000"});
  CHECK(two.code == cli::kOk);
  std::istringstream in(two.out);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "n,seed,solve_ns,pairs,beta");
  CHECK(lines[1].rfind("1000,1,", 0) == 0);
  CHECK(lines[2].rfind("10000,1,", 0) == 0);
  CHECK(lines[3].rfind("median,1000,", 0) == 0);
  CHECK(lines[5].rfind("ratio,1000,10000,", 0) == 0);

  auto three = run({"bench", "--sizes", "2000", "--repeats", "3"});
  std::istringstream in3(three.out);
  int rows = 0;
  for (std::string line; std::getline(in3, line);) rows += line.rfind("2000,", 0) == 0;
  CHECK(rows == 3);
  CHECK(three.out.find("median,2000,") != std::string::npos);
}

TEST_CASE("recognize") {
  auto c4 = run({"recognize", "--graph", data("c4.g")});
  CHECK(c4.code == cli::kOk);
  CHECK(format_graph(materialize(parse_cotree(c4.out))) == format_graph(parse_graph(read_file(data("c4.g")))));

  auto p4 = run({"recognize", "--graph", data("p4.g")});
  CHECK(p4.code == cli::kNotCograph);
  CHECK(p4.out == "p4 0 1 2 3\n");

  auto k2 = run({"recognize", "--graph", data("k2.g")});
  CHECK(k2.out == "(* 0 1)\n");

  CHECK(run({"recognize", "--graph", data("malformed.sol")}).code == cli::kInputError);
}

TEST_CASE("solve output always passes verify") {
  const auto dir = scratch_dir();
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto base = (dir / ("pipe" + std::to_string(seed))).string();
    REQUIRE(run({"gen", "-n", std::to_string(2 + seed % 30), "--seed", std::to_string(seed), "--join-bias", "0.7", "-o", base}).code == cli::kOk);
    auto solved = run({"solve", "--cotree", base + ".cotree", "--restricted", base + ".restricted", "-o", base + ".sol"});
    if (solved.code == cli::kNoSolution) continue;
    REQUIRE(solved.code == cli::kOk);
    auto checked = run({"verify", "--cotree", base + ".cotree", "--restricted", base + ".restricted", "--solution", base + ".sol"});
    CHECK(checked.code == cli::kOk);
  }
}

}
