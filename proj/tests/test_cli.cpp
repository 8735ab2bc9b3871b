#include "cli.hpp"

#include "qfaul/record.hpp"

#include <json.hpp>

#include <doctest.h>

#include <sstream>

using namespace qfaul;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {
  TEST_CASE("records") {
    CoeffRecord r{Family::G, 4, 2, Route::det, salie_G(4, 2)};
    CHECK(to_json(r) == R"({"family":"G","m":4,"k":2,"variable":"q","route":"det",)"
                        R"("min_exp":0,"coefficients":["10","24","24","10"]})");
    CHECK(record_from_json(to_json(r)) == r);
    CHECK(to_csv_rows(r) == "G,4,2,0,10\nG,4,2,1,24\nG,4,2,2,24\nG,4,2,3,10\n");
    CHECK(to_pretty(r) == "G(4,2) = 10 + 24q + 24q^2 + 10q^3");
    CHECK_THROWS_AS(record_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(record_from_json("not json"), std::invalid_argument);
  }

  TEST_CASE("compute") {
    auto g = run({"compute", "--family", "G", "--m", "4", "--k", "2", "--method", "lgv"});
    CHECK(g.code == 0);
    CHECK(g.out == "10 + 24q + 24q^2 + 10q^3\n");
    auto p = run({"compute", "--family", "P", "--m", "1", "--k", "0"});
    CHECK(p.code == 0);
    CHECK(p.out == "1\n");
    for (auto format : {"pretty", "json", "csv"}) {
      auto det = run({"compute", "--family", "H", "--m", "4", "--k", "2",
                      "--method", "det", "--format", format});
      for (auto method : {"lgv", "lgv-det", "invert"}) {
        auto other = run({"compute", "--family", "H", "--m", "4", "--k", "2",
                          "--method", method, "--format", format});
        CHECK(other.code == 0);
        if (std::string(format) == "json") {
          auto a = nlohmann::ordered_json::parse(det.out);
          auto b = nlohmann::ordered_json::parse(other.out);
          CHECK(a["coefficients"] == b["coefficients"]);
        } else {
          CHECK(det.out == other.out);
        }
      }
    }
  }

  TEST_CASE("json round-trip and csv agreement") {
    auto j = run({"compute", "--family", "Q", "--m", "4", "--k", "2", "--format", "json"});
    REQUIRE(j.code == 0);
    std::string line = j.out.substr(0, j.out.size() - 1);
    CHECK(nlohmann::ordered_json::parse(line).dump() == line);
    auto c = run({"compute", "--family", "Q", "--m", "4", "--k", "2", "--format", "csv"});
    REQUIRE(c.code == 0);
    CoeffRecord r = record_from_json(line);
    CHECK(c.out == csv_header() + to_csv_rows(r));

    auto table = run({"table", "--family", "P", "--max-m", "3", "--format", "json"});
    REQUIRE(table.code == 0);
    auto parsed = nlohmann::ordered_json::parse(table.out);
    CHECK(parsed.size() == 6);
    for (const auto &rec : parsed)
      CHECK(to_json(record_from_json(rec.dump())) == rec.dump());
  }

  TEST_CASE("errors and exit codes") {
    auto bad = run({"compute", "--family", "P", "--m", "3", "--k", "3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error") != std::string::npos);
    CHECK(run({"compute", "--family", "X", "--m", "3", "--k", "1"}).code == 2);
    CHECK(run({"compute", "--family", "P", "--m", "3"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("tables") {
    auto q = run({"table", "--family", "Q", "--max-m", "4"});
    CHECK(q.code == 0);
    CHECK(q.out ==
          "1\n"
          "1 | 1\n"
          "1 | 2 + q + 2q^2 | 2 + q + 2q^2\n"
          "1 | 3 + 2q + 4q^2 + 2q^3 + 3q^4 | 5 + 6q + 15q^2 + 11q^3 + 15q^4 + "
          "6q^5 + 5q^6 | 5 + 6q + 15q^2 + 11q^3 + 15q^4 + 6q^5 + 5q^6\n");
    CHECK(run({"table", "--family", "G", "--max-m", "1"}).out == "1\n");
    auto h = run({"table", "--family", "H", "--max-m", "4"});
    CHECK(h.out.find("10 + 15q + 30q^2 + 26q^3 + 30q^4 + 15q^5 + 10q^6") !=
          std::string::npos);
    auto csv = run({"table", "--family", "H", "--max-m", "2", "--format", "csv"});
    CHECK(csv.out == "family,m,k,exp,coefficient\nH,1,0,0,1\nH,2,0,0,1\nH,2,1,0,2\n");
  }

  TEST_CASE("verify") {
    auto sym = run({"verify", "--suite", "symmetry", "--max-m", "8"});
    CHECK(sym.code == 0);
    CHECK(sym.out.find("FAIL") == std::string::npos);
    auto lgv = run({"verify", "--suite", "lgv", "--max-m", "5"});
    CHECK(lgv.code == 0);
    CHECK(lgv.out.find("PASS lgv/brute/G/m=04/k=02") != std::string::npos);
  }

  TEST_CASE("shape") {
    auto q = run({"shape", "--family", "Q", "--max-m", "4"});
    CHECK(q.code == 0);
    CHECK(q.out.find("Q(4,1)  unimodal no") != std::string::npos);
    auto p = run({"shape", "--family", "P", "--max-m", "8"});
    CHECK(p.out.find("log-concave no") == std::string::npos);
    CHECK(run({"shape", "--family", "P", "--max-m", "1"}).out ==
          "P(1,0)  unimodal yes  log-concave yes  palindromic yes\n");
  }
}
