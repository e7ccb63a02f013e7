#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "fibconj/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fibconj::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("nblock prints the block substitution and code table") {
  const auto r = run({"nblock", "--sub", "0->01;1->0", "--n", "2"});
  CHECK(r.code == fibconj::cli::kExitOk);
  CHECK(contains(r.out, "1->12, 2->3, 3->12"));
  CHECK(contains(r.out, "01"));
  CHECK(contains(r.out, "00"));
}

TEST_CASE("fib blocks and sub --print") {
  const auto blocks = run({"fib", "blocks", "7"});
  CHECK(blocks.code == 0);
  CHECK(contains(blocks.out, "6123451234512"));
  CHECK(contains(blocks.out, "61234512"));

  const auto echo = run({"sub", "--sub", "0->01;1->0", "--power", "1", "--print"});
  CHECK(echo.code == 0);
  CHECK(echo.out == "0->01;1->0\n");
}

TEST_CASE("JSON output is versioned and deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"--format", "json", "nblock", "--sub", "0->01;1->0", "--n", "4"},
      {"--format", "json", "classify3"},
      {"--format", "json", "matrices", "--r", "3", "--bound", "2"},
      {"--format", "json", "eta", "7"},
      {"--format", "json", "cyclic", "--sub", "1->12;2->34;3->5;4->1;5->23"},
      {"--format", "json", "verify-paper", "--criterion", "10"},
  };
  for (const auto& args : commands) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.contains("command"));
    CHECK(doc.contains("inputs"));
    CHECK(doc.contains("results"));
    CHECK(doc.contains("checks"));
  }
}

TEST_CASE("check failures exit with 1") {
  const auto r = run({"certify", "--sub", "a->b;b->ca;c->ba", "--map", "a:0,b:1,c:1", "--target", "0->01;1->0"});
  CHECK(r.code == fibconj::cli::kExitCheckFailed);
  CHECK(contains(r.out, "NOT-INTERTWINING"));

  const auto ok = run({"certify", "--sub", "a->b;b->ca;c->ba", "--map", "a:1,b:0,c:0", "--target", "0->01;1->0"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "CONJUGATE"));
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({}).code == fibconj::cli::kExitUsage);
  CHECK(run({"bogus"}).code == fibconj::cli::kExitUsage);
  CHECK(run({"lang", "--sub", "0->01;1->0"}).code == fibconj::cli::kExitUsage);
  CHECK(run({"--format", "yaml", "lang", "--sub", "0->01;1->0", "--n", "2"}).code == fibconj::cli::kExitUsage);

  const auto bad = run({"sub", "--sub", "0->01;1->"});
  CHECK(bad.code == fibconj::cli::kExitUsage);
  CHECK(contains(bad.err, "offset 7"));

  CHECK(run({"eta", "4"}).code == fibconj::cli::kExitUsage);
  CHECK(run({"lang", "--sub", "0->0;1->10", "--n", "2"}).code == fibconj::cli::kExitUsage);
  CHECK(run({"matrices", "--r", "4"}).code == fibconj::cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("remaining subcommands run") {
  const std::vector<std::vector<std::string>> commands = {
      {"lang", "--sub", "0->01;1->0", "--n", "5", "--list"},
      {"reshape", "--sub", "1->12;2->3;3->45;4->12;5->3", "--b0", "123", "--b1", "45", "--cuts", "2,2,1/1,2"},
      {"eta", "7"},
      {"fib", "singular", "5"},
      {"fib", "return", "4"},
      {"fib", "doubled", "--check", "1000"},
      {"fib", "rotation", "--z", "0,1", "--from", "-3", "--to", "3"},
      {"fib", "powers4", "--len", "2000", "--doubled"},
      {"ztriples", "--sub", "a->b;b->ca;c->ab"},
      {"reverse", "--sub", "a->b;b->ca;c->ba"},
      {"verify-paper", "--criterion", "1"},
  };
  for (const auto& args : commands) {
    const auto r = run(args);
    INFO(args.front());
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
  }
  const auto reshape = run(commands[1]);
  CHECK(contains(reshape.out, "1->12, 2->34, 3->5, 4->1, 5->23"));
  CHECK(contains(run({"fib", "singular", "5"}).out, "10100101"));
}
