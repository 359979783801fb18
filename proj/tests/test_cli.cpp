#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string tmp = std::string(QORC_BIN_DIR) + "/cli_out.txt";
  const std::string cmd = std::string(QORC_CLI) + " " + args + " > " + tmp + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.status = WEXITSTATUS(rc);
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string write_input(const std::string& name, const std::string& json) {
  const std::string path = std::string(QORC_BIN_DIR) + "/" + name;
  std::ofstream out(path);
  out << json;
  return path;
}

}  // namespace

TEST_CASE("resolve on the A2 determinant input") {
  std::string path = write_input("det.json", R"({
    "vertices": 2, "arrows": [[1,2]],
    "alpha": [3,3], "beta": [2,1]
  })");
  RunResult r = run_cli("resolve --input " + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("total:") != std::string::npos);
  CHECK(r.out.find("normal") != std::string::npos);

  RunResult j = run_cli("resolve --input " + path + " --format json");
  CHECK(j.status == 0);
  CHECK(j.out.find("\"rank\": \"1\"") != std::string::npos);
}

TEST_CASE("resolve rank <= 1 totals") {
  std::string path = write_input("rank1.json", R"({
    "vertices": 2, "arrows": [[1,2]],
    "alpha": [3,3], "beta": [2,0]
  })");
  RunResult r = run_cli("resolve --input " + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("1  9 16  9  1") != std::string::npos);
}

TEST_CASE("equations on the A7 example") {
  std::string path = write_input("a7.json", R"({
    "vertices": 7,
    "arrows": [[1,2],[2,3],[4,3],[5,4],[5,6],[7,6]],
    "beta":  [1,1,1,1,1,2,2],
    "gamma": [2,4,3,2,1,1,0]
  })");
  RunResult r = run_cli("equations --input " + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("rank X[1,7] <= 6") != std::string::npos);
  CHECK(r.out.find("size 7x7") != std::string::npos);
  CHECK(r.out.find("degree 11") != std::string::npos);
}

TEST_CASE("byte-identical output for identical input and seed") {
  std::string path = write_input("ver.json", R"({
    "vertices": 2, "arrows": [[1,2]],
    "alpha": [3,3], "beta": [2,1]
  })");
  RunResult a = run_cli("verify --input " + path + " --seed 42 --trials 6 --format json");
  RunResult b = run_cli("verify --input " + path + " --seed 42 --trials 6 --format json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("missing seed on a randomized command is an input error") {
  std::string path = write_input("seedless.json", R"({
    "vertices": 2, "arrows": [[1,2]],
    "alpha": [1,1],
    "summands": [[1,1,1],[2,2,1]]
  })");
  RunResult r = run_cli("onestep --input " + path);
  CHECK(r.status == 1);
  CHECK(r.out.find("input error") != std::string::npos);
}

TEST_CASE("onestep on the A4 witness summands") {
  std::string path = write_input("a4w.json", R"({
    "vertices": 4, "arrows": [[1,2],[2,3],[3,4]],
    "alpha": [1,1,1,1],
    "summands": [[1,1,1],[2,3,1],[4,4,1]]
  })");
  RunResult r = run_cli("onestep --input " + path + " --seed 9 --format json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"one_step_betas\": [\n    [\n      1,\n      0,\n      1,\n      0\n    ]\n  ]") !=
        std::string::npos);
  CHECK(r.out.find("\"split_sufficient_beta\": null") != std::string::npos);
}

TEST_CASE("intersect on the zero A3 representation") {
  std::string path = write_input("a3zero.json", R"({
    "vertices": 3, "arrows": [[1,2],[2,3]],
    "alpha": [1,1,1],
    "representation": {"matrices": [[[0]],[[0]]]}
  })");
  RunResult r = run_cli("intersect --input " + path + " --seed 5");
  CHECK(r.status == 0);
  CHECK(r.out.find("rank X[1,2] <= 0") != std::string::npos);
  CHECK(r.out.find("rank X[2,3] <= 0") != std::string::npos);
}

TEST_CASE("cap exceeded exits with status 3") {
  std::string path = write_input("cap.json", R"({
    "vertices": 2, "arrows": [[1,2]],
    "alpha": [3,3], "beta": [2,0]
  })");
  RunResult r = run_cli("resolve --input " + path + " --max-collections 2");
  CHECK(r.status == 3);
}

TEST_CASE("bad input exits with status 1") {
  std::string path = write_input("bad.json", R"({"vertices": 2})");
  RunResult r = run_cli("resolve --input " + path);
  CHECK(r.status == 1);
  RunResult r2 = run_cli("resolve --input /nonexistent/file.json");
  CHECK(r2.status == 1);
}

TEST_CASE("expand-minors prints polynomials") {
  std::string path = write_input("exp.json", R"({
    "vertices": 2, "arrows": [[1,2]],
    "alpha": [2,2], "beta": [1,0]
  })");
  RunResult r = run_cli("equations --input " + path + " --expand-minors");
  CHECK(r.status == 0);
  // rank <= 0 condition: the four matrix entries as linear polynomials.
  CHECK(r.out.find("x[1][1][1]") != std::string::npos);
  CHECK(r.out.find("x[1][2][2]") != std::string::npos);
}

TEST_CASE("euler command") {
  std::string path = write_input("euler.json", R"({
    "vertices": 7,
    "arrows": [[1,2],[2,3],[4,3],[5,4],[5,6],[7,6]],
    "alpha": [1,1,1,1,1,1,1]
  })");
  RunResult r = run_cli("euler --input " + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("E_Q(alpha) = 1") != std::string::npos);
}
