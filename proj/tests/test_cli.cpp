#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "spex/cli.hpp"
#include "spex/constructions.hpp"
#include "spex/error.hpp"
#include "spex/family.hpp"
#include "spex/graph6.hpp"

using namespace spex;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json first_line_json(const std::string& s) { return nlohmann::json::parse(s.substr(0, s.find('\n'))); }

}  // namespace

TEST_CASE("family expressions") {
  CHECK(*parse_family("P5") == path_graph(5));
  CHECK(*parse_family("C7") == cycle_graph(7));
  CHECK(*parse_family("K4") == complete_graph(4));
  CHECK(*parse_family("K2,18") == complete_bipartite(2, 18));
  CHECK(*parse_family("k2+[4,1,1]") == k2_join(LinearForest({4, 1, 1}), true));
  CHECK(*parse_family("k2+[4,1,1]", false) == k2_join(LinearForest({4, 1, 1}), false));
  CHECK(*parse_family("extremal(8,0)") == extremal_graph(8, 0));
  CHECK_FALSE(parse_family("DhC").has_value());
  CHECK_FALSE(parse_family("P").has_value());
  CHECK_THROWS_AS(parse_family("C2"), argument_error);
  CHECK_THROWS_AS(parse_family("extremal(6,0)"), argument_error);
  CHECK(parse_graph_argument("DhC") == path_graph(5));
}

TEST_CASE("build") {
  const auto r = run({"build", "extremal", "--n", "8", "--k", "0", "--out", "g6"});
  CHECK(r.code == 0);
  CHECK(r.out == to_graph6(k2_join(LinearForest({4, 1, 1}))) + "\n");

  const auto lna = run({"build", "lna", "--n", "8", "--a", "2"});
  CHECK(lna.code == 0);
  CHECK(std::count(lna.out.begin(), lna.out.end(), '\n') == 3);

  const auto edges = run({"build", "join", "--parts", "2", "--out", "edges", "--no-dominating-edge"});
  CHECK(edges.code == 0);
  std::istringstream edge_text(edges.out);
  CHECK(from_edge_list(edge_text) == k2_join(LinearForest({2}), false));

  CHECK(run({"build", "extremal", "--n", "5", "--k", "0"}).code == cli::kExitUsage);
  CHECK(run({"build", "nonsense"}).code == cli::kExitUsage);
}

TEST_CASE("rho") {
  const auto r = run({"rho", "K2,18"});
  CHECK(r.code == 0);
  const auto j = first_line_json(r.out);
  CHECK(std::abs(j["rho"].get<double>() - 6.0) <= 1e-12);
  CHECK(j["residual"].get<double>() <= 1e-12);
  CHECK(j.contains("iters"));

  const auto vec = run({"rho", "P3", "--emit-vector", "-"});
  CHECK(vec.out.rfind("vertex,x\n", 0) == 0);
  CHECK(vec.out.find("\n1,1\n") != std::string::npos);

  const std::string path = std::string(SPEX_TEST_TMPDIR) + "/perron.csv";
  CHECK(run({"rho", "C5", "--emit-vector", path}).code == 0);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "vertex,x");

  CHECK(run({"rho", "K2,18", "--tol", "0"}).code == cli::kExitUsage);
  const auto stdin_rho = run({"rho"}, "DhC\n");
  CHECK(std::abs(first_line_json(stdin_rho.out)["rho"].get<double>() - std::sqrt(3.0)) <= 1e-12);
  CHECK(run({"rho", "P2"}, "").code == 0);
  CHECK(run({"rho", "!!"}).code == cli::kExitUsage);
}

TEST_CASE("member and spectrum") {
  const std::string g6 = to_graph6(extremal_graph(8, 0)) + "\n";
  const auto m = run({"member", "--k", "0"}, g6);
  CHECK(m.code == 0);
  CHECK(m.out == "{\"member\":true,\"witness\":8}\n");

  const auto edges = run({"member", "--k", "0"}, "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  CHECK(edges.out == "{\"member\":true,\"witness\":3}\n");

  const auto not_member = run({"member", "k2+[6]", "--k", "0"});
  CHECK(not_member.out == "{\"member\":false,\"witness\":null}\n");

  CHECK(run({"member", "K5", "--k", "0"}).code == cli::kExitUsage);
  CHECK(run({"member", "C6"}).code == cli::kExitUsage);  // --k is required

  const auto sp = run({"spectrum", "K2,8"});
  CHECK(sp.code == 0);
  const auto arr = first_line_json(sp.out);
  std::vector<int> present;
  for (const auto& e : arr)
    if (e["status"] == "present") present.push_back(e["ell"].get<int>());
  CHECK(present == std::vector<int>{4});
}

TEST_CASE("verify and sweep exit codes") {
  const auto l1 = run({"verify", "lemma1", "--n", "40", "--a1", "1", "--a2", "0", "--L1", "37,1", "--L2", "38"});
  CHECK(l1.code == 0);
  CHECK(first_line_json(l1.out)["holds"] == "certified");

  CHECK(run({"verify", "lemma1", "--n", "40", "--a1", "2", "--a2", "2", "--L1", "34,2,2", "--L2", "35,2,1"}).code ==
        cli::kExitUsage);
  CHECK(run({"verify", "lemma2", "--n", "100", "--k", "0", "--n1", "49", "--n2", "49"}).code == cli::kExitUsage);

  const auto forced = run({"verify", "lemma2", "--n", "100", "--k", "0", "--n1", "49", "--n2", "49", "--force"});
  CHECK(forced.code == 0);
  CHECK(first_line_json(forced.out)["within_hypothesis"] == false);

  const auto c33 = run({"verify", "claim33", "--n", "300", "--k", "0", "--n1", "149", "--n2", "149"});
  CHECK(c33.code == 0);
  CHECK(first_line_json(c33.out)["witnesses"].size() == 3);

  const auto csv = run({"verify", "entry-bounds", "--n", "20", "--L", "18", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("check_id,params,margin,value,holds\n", 0) == 0);
  CHECK(csv.out.find("entry_bounds,\"{\"\"n\"\":20") != std::string::npos);

  const auto text = run({"verify", "entry-bounds", "--n", "20", "--L", "18", "--format", "text"});
  CHECK(text.out.find(": certified") != std::string::npos);

  const auto eb = run({"sweep", "entry-bounds", "--samples", "5", "--seed", "3", "--nmin", "20", "--nmax", "30"});
  CHECK(eb.code == 0);
  CHECK(std::count(eb.out.begin(), eb.out.end(), '\n') == 6);

  const auto l2 = run({"sweep", "lemma2", "--n", "300", "--k", "0", "--sum", "20"});
  // Nine (n1, n2) points, two reports each, plus the summary. The interval
  // claim fails at n2 = 2, which makes the run exit with 1.
  CHECK(std::count(l2.out.begin(), l2.out.end(), '\n') == 19);
  CHECK(l2.code == cli::kExitViolated);
  std::istringstream lines(l2.out);
  std::vector<std::string> violated;
  for (std::string line; std::getline(lines, line);) {
    const auto j = nlohmann::json::parse(line);
    if (j["holds"] == "violated") violated.push_back(j["check_id"].get<std::string>() + ":" + std::to_string(j["params"].value("n2", -1)));
  }
  CHECK(violated == std::vector<std::string>{"claim33:2", "lemma2_sweep:-1"});

  const auto l2_ok = run({"sweep", "lemma2", "--n", "300", "--k", "0", "--sum", "20", "--format", "csv"});
  CHECK(l2_ok.out.find("lemma2_sweep") != std::string::npos);
}

TEST_CASE("usage errors, help and extra arguments") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"rho", "K4", "K5"}).code == cli::kExitUsage);
  CHECK(run({"build", "extremal", "extra", "--n", "8"}).code == cli::kExitUsage);
  CHECK(run({"rho", "K4", "--unknown"}).code == cli::kExitUsage);
  CHECK(run({"verify", "entry-bounds", "--n", "20", "--L", "18", "--format", "xml"}).code == cli::kExitUsage);

  for (std::vector<std::string> cmd : std::vector<std::vector<std::string>>{
           {"--help"}, {"build", "--help"}, {"rho", "--help"}, {"spectrum", "--help"}, {"member", "--help"},
           {"verify", "--help"}, {"verify", "lemma1", "--help"}, {"verify", "lemma2", "--help"},
           {"verify", "claim33", "--help"}, {"verify", "entry-bounds", "--help"}, {"sweep", "--help"},
           {"sweep", "argmax", "--help"}, {"sweep", "lemma1", "--help"}, {"sweep", "lemma2", "--help"},
           {"sweep", "entry-bounds", "--help"}, {"selftest", "--help"}}) {
    const auto r = run(cmd);
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
  }
}

TEST_CASE("identical inputs give identical bytes") {
  const std::vector<std::string> cmds[] = {
      {"rho", "extremal(40,1)"},
      {"spectrum", "k2+[5,3,1]"},
      {"sweep", "lemma1", "--n", "40"},
      {"verify", "claim33", "--n", "600", "--k", "1", "--n1", "250", "--n2", "250", "--L", "98"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("selftest passes") {
  const auto r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
