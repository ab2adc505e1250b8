#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "sombor/graph_io.hpp"
#include "sombor/report.hpp"
#include "sombor/sombor.hpp"

using namespace sombor;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "sombor");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand_range") {
  CHECK(cli::expand_range("5", 9) == std::vector<int>{5});
  CHECK(cli::expand_range("3..6", 9) == std::vector<int>{3, 4, 5, 6});
  CHECK(cli::expand_range("3..n-1", 6) == std::vector<int>{3, 4, 5});
  CHECK(cli::expand_range("n", 7) == std::vector<int>{7});
  CHECK(cli::expand_range("5..3", 9).empty());
}

TEST_CASE("compute on graph6 input") {
  Result r = run({"compute"}, "Dhc\nA_\n");
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "Dhc\t14.1421356237\t{2:10}\nA_\t1.41421356237\t{2:1}\n");
}

TEST_CASE("compute keeps stream order and counts") {
  Result r = run({"compute", "--format", "json"}, "Dhc\nA_\nB?\n");
  REQUIRE(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["graph6"] == "Dhc");
  CHECK(j[1]["graph6"] == "A_");
  CHECK(j[2]["connected"] == false);
  CHECK(r.err.find("disconnected") != std::string::npos);
  CHECK(radical_terms_from_json(j[0]["so_radical_terms"]) == RadicalSum::sqrt_of(2, 10));
}

TEST_CASE("compute on edge-list input") {
  Result r = run({"compute", "--input-format", "edgelist", "--format", "csv"}, "3 3\n0 1\n1 2\n2 0\n");
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "index,graph6,order,size,connected,so,terms\n0,Bw,3,3,true,8.48528137424,{2:6}\n");
}

TEST_CASE("parse errors exit 2 with the line number") {
  Result r = run({"compute"}, "Dhc\n!!\n");
  CHECK(r.code == cli::kUsageError);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("family") {
  Result ung = run({"family", "--name", "ung", "--n", "8", "--g", "4", "--format", "json"});
  REQUIRE(ung.code == cli::kOk);
  auto j = nlohmann::json::parse(ung.out);
  CHECK(j["equal"] == true);

  Result lol = run({"family", "--name", "lollipop", "--n", "8", "--g", "3"});
  CHECK(lol.code == cli::kOk);
  CHECK(lol.out.find("24.3664") != std::string::npos);

  Result bad = run({"family", "--name", "starlike", "--n", "6", "--delta", "4", "--k", "1"});
  CHECK(bad.code == cli::kUsageError);
  CHECK(bad.err.find("2*delta - n + 1 = 3") != std::string::npos);

  CHECK(run({"family", "--name", "kite", "--n", "7"}).code == cli::kUsageError);
  CHECK(run({"family", "--name", "blob", "--n", "7"}).code == cli::kUsageError);
}

TEST_CASE("enumerate") {
  Result r = run({"enumerate", "--class", "connected", "--n", "4"});
  CHECK(r.code == cli::kOk);
  std::istringstream lines(r.out);
  CHECK(read_graphs(lines, InputFormat::kGraph6).size() == 6);
  Result labeled = run({"enumerate", "--n", "5", "--labeled"});
  CHECK(std::count(labeled.out.begin(), labeled.out.end(), '\n') == 21);
  CHECK(run({"enumerate", "--n", "10"}).code == cli::kUsageError);
  CHECK(run({"enumerate", "--class", "trees", "--n", "7", "--labeled"}).code == cli::kUsageError);
}

TEST_CASE("search") {
  Result r = run({"search", "--n", "6", "--unicyclic", "true", "--objective", "min", "--universe", "unicyclic",
                  "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["witnesses_graph6"].size() == 1);
  const Graph w = from_graph6(j["witnesses_graph6"][0].get<std::string>());
  CHECK(sombor_exact(w) == radical_terms_from_json(j["optimum_radical_terms"]));
  CHECK(run({"search", "--n", "5", "--girth", "4", "--universe", "trees"}).code == cli::kUsageError);
}

TEST_CASE("verify") {
  Result r = run({"verify", "--theorem", "unicyclic-max", "--n", "5..6"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("7/7 passed") != std::string::npos);

  Result csv = run({"verify", "--theorem", "pendent-max", "--n", "6", "--format", "csv"});
  CHECK(csv.code == cli::kOk);
  CHECK(csv.out.rfind("theorem,params,bound,optimum,match,witness_count,seconds\n", 0) == 0);

  Result cap = run({"verify", "--theorem", "pendent-max", "--n", "12"});
  CHECK(cap.code == cli::kUsageError);
  CHECK(cap.err.find("capped") != std::string::npos);
  CHECK(cap.out.empty());

  // a cap violation anywhere in the range refuses before any work
  Result mixed = run({"verify", "--theorem", "unicyclic-max", "--n", "5..13"});
  CHECK(mixed.code == cli::kUsageError);
  CHECK(mixed.out.empty());

  CHECK(run({"verify", "--theorem", "nope", "--n", "5"}).code == cli::kUsageError);
}

TEST_CASE("json output is the same for any worker count") {
  auto a = run({"verify", "--theorem", "cutedge-max", "--n", "6", "--format", "json", "--workers", "1"});
  auto b = run({"verify", "--theorem", "cutedge-max", "--n", "6", "--format", "json", "--workers", "3"});
  auto strip = [](const std::string& s) {
    auto j = nlohmann::json::parse(s);
    for (auto& rec : j) rec.erase("seconds");
    return j;
  };
  CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("--out writes to a file") {
  const std::string path = "test_cli_out.txt";
  Result r = run({"--out", path, "compute"}, "A_\n");
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(line == "A_\t1.41421356237\t{2:1}");
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"compute", "--format", "xml"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kOk);
}
