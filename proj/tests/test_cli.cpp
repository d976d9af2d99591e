#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lant/cli.hpp"
#include "lant/io.hpp"
#include "helpers.hpp"

using namespace lant;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<const char*> args) {
  args.insert(args.begin(), "lant");
  std::ostringstream out;
  std::ostringstream err;
  RunResult r;
  r.code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("matrix dump matches the worked 10x2 example") {
  const RunResult r = run_cli({"matrix", "--n", "10", "--q", "2,5"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "row,2,5\n"
        "1,0,0\n"
        "2,1,0\n"
        "3,0,0\n"
        "4,2,0\n"
        "5,0,1\n"
        "6,1,0\n"
        "7,0,0\n"
        "8,3,0\n"
        "9,0,0\n"
        "10,1,1\n");
}

TEST_CASE("matrix json carries the candidates and dense rows") {
  const RunResult r = run_cli({"matrix", "--n", "6", "--q", "primes", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"n\": 6, \"q\": [2, 3, 5], \"rows\": [[0, 0, 0], [1, 0, 0], [0, 1, 0], "
        "[2, 0, 0], [0, 0, 1], [1, 1, 0]]}\n");
}

TEST_CASE("estimate reports consistency for the true primes") {
  const RunResult r = run_cli({"estimate", "--n", "20", "--q", "primes"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"consistent\": true") != std::string::npos);
  CHECK(r.out.find("\"valid\": true") != std::string::npos);
  CHECK(r.out.find("\"complete\": true") != std::string::npos);

  const RunResult naturals = run_cli({"estimate", "--n", "20", "--q", "naturals"});
  CHECK(naturals.out.find("\"consistent\": false") != std::string::npos);
  CHECK(naturals.out.find("\"complete\": true") != std::string::npos);
}

TEST_CASE("ntf prints the LANT value with its path") {
  const RunResult r = run_cli({"ntf", "--fn", "pi", "--x", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\": 4") != std::string::npos);
  CHECK(r.out.find("\"path\": \"lant\"") != std::string::npos);

  const RunResult o = run_cli({"ntf", "--fn", "pi", "--x", "10", "--oracle"});
  CHECK(o.code == 0);
  CHECK(o.out.find("\"value\": 4") != std::string::npos);
  CHECK(o.out.find("\"path\": \"oracle\"") != std::string::npos);

  const RunResult ip1 = run_cli({"ntf", "--fn", "ip", "--x", "1"});
  CHECK(ip1.code == 0);
  CHECK(ip1.out.find("\"value\": null") != std::string::npos);

  const RunResult ip0 = run_cli({"ntf", "--fn", "ip", "--x", "0"});
  CHECK(ip0.code == 1);
}

TEST_CASE("invert dumps exact integer rows") {
  const RunResult r = run_cli({"invert", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "row,1,2,3,4\n"
        "1,1,0,0,0\n"
        "2,-1,1,0,0\n"
        "3,-1,0,1,0\n"
        "4,1,-2,0,1\n");
}

TEST_CASE("zeta emits re/im/err json") {
  const RunResult r = run_cli({"zeta", "--re", "2", "--terms", "100000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"re\": 1.64493") != std::string::npos);
  CHECK(r.out.find("\"im\": ") != std::string::npos);
  CHECK(r.out.find("\"err\": ") != std::string::npos);

  const RunResult pole = run_cli({"zeta", "--re", "1"});
  CHECK(pole.code == 1);
}

TEST_CASE("scan emits the csv table") {
  const RunResult r = run_cli({"scan", "--from", "4", "--to", "8", "--step", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,ld,li,ratio\n", 0) == 0);
  CHECK(r.out.find("\n4,") != std::string::npos);
  CHECK(r.out.find("\n6,") != std::string::npos);
  CHECK(r.out.find("\n8,") != std::string::npos);
}

TEST_CASE("identical argv produces byte-identical output") {
  for (const auto& args : std::vector<std::vector<const char*>>{
           {"matrix", "--n", "50", "--q", "primes"},
           {"estimate", "--n", "20", "--q", "naturals"},
           {"scan", "--from", "10", "--to", "30", "--step", "10"},
           {"zeta", "--re", "1.5", "--im", "10", "--terms", "50000"}}) {
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("matrix csv round-trips through the parser") {
  const auto q = cli::parse_candidates("primes", 30);
  const FactorizationMatrix original = candidate_factorization(q, 30);
  std::stringstream buffer;
  io::write_matrix_csv(buffer, original);
  const FactorizationMatrix parsed = io::read_matrix_csv(buffer);
  CHECK(parsed.n == original.n);
  REQUIRE(parsed.cols() == original.cols());
  CHECK(testing::equal_values(parsed.q.values, original.q.values));
  for (Index j = 0; j < original.cols(); ++j) {
    CHECK(parsed.columns[j].entries == original.columns[j].entries);
  }
}

TEST_CASE("candidate specifications") {
  CHECK(testing::equal_values(cli::parse_candidates("primes", 10).values,
                              (Int64Vector(4) << 2, 3, 5, 7).finished()));
  CHECK(cli::parse_candidates("naturals", 5).size() == 5);
  CHECK(testing::equal_values(cli::parse_candidates("7,2,5", 10).values,
                              (Int64Vector(3) << 2, 5, 7).finished()));
  CHECK_THROWS_AS(cli::parse_candidates("2,2,3", 10), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_candidates("2,x", 10), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_candidates("", 10), std::invalid_argument);

  const std::string path = "candidates_under_test.txt";
  {
    std::ofstream f(path);
    f << "5\n2\n3\n";
  }
  CHECK(testing::equal_values(cli::parse_candidates("@" + path, 10).values,
                              (Int64Vector(3) << 2, 3, 5).finished()));
  std::remove(path.c_str());
}

TEST_CASE("exit codes separate usage and domain errors") {
  CHECK(run_cli({}).code == 2);                                      // no subcommand
  CHECK(run_cli({"matrix", "--n", "10"}).code == 2);                 // missing --q
  CHECK(run_cli({"matrix", "--bogus", "1"}).code == 2);              // unknown flag
  CHECK(run_cli({"frobnicate"}).code == 2);                          // unknown subcommand
  CHECK(run_cli({"matrix", "--n", "0", "--q", "primes"}).code == 1); // bad domain
  CHECK(run_cli({"ntf", "--fn", "li", "--x", "1"}).code == 1);       // out of domain
  CHECK(run_cli({"scan", "--from", "5", "--to", "3"}).code == 1);    // empty range
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("output redirection writes the same bytes to a file") {
  const std::string path = "matrix_under_test.csv";
  const RunResult direct = run_cli({"matrix", "--n", "12", "--q", "naturals"});
  const RunResult redirected =
      run_cli({"--output", path.c_str(), "matrix", "--n", "12", "--q", "naturals"});
  CHECK(redirected.code == 0);
  CHECK(redirected.out.empty());
  std::ifstream f(path);
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str() == direct.out);
  std::remove(path.c_str());
}
