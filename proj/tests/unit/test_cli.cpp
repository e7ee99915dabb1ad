#include <doctest.h>

#include <json.hpp>

#include <braidloom/errors.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "braidloom_cli/cli.hpp"

using namespace braidloom::cli;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "braidloom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

Command parsed(std::vector<std::string> args) {
  args.insert(args.begin(), "braidloom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  const Parsed p = parse_args(static_cast<int>(argv.size()), argv.data());
  REQUIRE(p.command.has_value());
  return *p.command;
}

}  // namespace

TEST_CASE("parse_args") {
  const Command d = parsed({"decode", "-5"});
  CHECK(d.verb == "decode");
  CHECK(d.code == -5);

  const Command w = parsed({"weave", "--word", "1 -2 -2 1"});
  CHECK(w.verb == "weave");
  CHECK(w.word == "1 -2 -2 1");

  const Command v = parsed({"verify-table", "--row", "9_34"});
  CHECK(v.verb == "verify-table");
  CHECK(v.row == "9_34");

  const Command r = parsed({"enumerate", "--max-len", "4", "--format", "records", "--jobs", "3"});
  CHECK(r.max_len == 4);
  CHECK(r.records);
  CHECK(r.jobs == 3);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).status == kUsage);
  CHECK(run_cli({"frobnicate"}).status == kUsage);
  CHECK(run_cli({"decode", "-5", "--bogus"}).status == kUsage);
  CHECK(run_cli({"decode"}).status == kUsage);
  CHECK(run_cli({"decode", "0"}).status == kUsage);
  CHECK(run_cli({"weave", "--word", "1 x"}).status == kUsage);
  CHECK(run_cli({"move", "--kind", "I", "--word", "1 2 2 -1 -1 -2", "--kappa", "A[1,2]"}).status == kUsage);
  CHECK(run_cli({"decode", "--help"}).status == kOk);
}

TEST_CASE("decode") {
  const Result r = run_cli({"decode", "-5"});
  CHECK(r.status == kOk);
  CHECK(r.out.find("word: -1 -1 -1\n") != std::string::npos);
  CHECK(r.out.find("strands: 2\n") != std::string::npos);

  const Result j = run_cli({"decode", "15", "--format", "records"});
  const auto rec = nlohmann::json::parse(j.out);
  CHECK(rec["word"] == "1 2 2 -1 -1 -2");
  CHECK(rec["strands"] == 3);
}

TEST_CASE("encode") {
  const Result r = run_cli({"encode", "--word", "1 2 2 -1 -1 -2", "--format", "records"});
  CHECK(r.status == kOk);
  CHECK(nlohmann::json::parse(r.out)["code"] == 15);
  CHECK(run_cli({"encode", "--word", "1 1 2"}).status == kUsage);
}

TEST_CASE("invariant") {
  const Result r = run_cli({"invariant", "--word", "-1 -1 -1", "--format", "records"});
  CHECK(r.status == kOk);
  const auto rec = nlohmann::json::parse(r.out);
  CHECK(rec["components"] == 1);
  CHECK(rec["writhe"] == -3);
  CHECK(rec["mfw_bound"] == 2);
  CHECK(rec["oracles_agree"] == true);
}

TEST_CASE("weave and comb") {
  const Result r = run_cli({"weave", "--word", "2 -1 2 -1", "--format", "records"});
  CHECK(r.status == kOk);
  const auto rec = nlohmann::json::parse(r.out);
  CHECK(rec["certified"] == true);
  CHECK(rec["type"] == "(3)");

  const Result t = run_cli({"weave", "--word", "1 2 2 -1 -1 -2", "--type", "3"});
  CHECK(t.out.find("yes") != std::string::npos);

  const Result c = run_cli({"comb", "--word", "2 1 1 -2 1 1"});
  CHECK(c.status == kOk);
  CHECK(c.out.find("ascending  beta_2: A[1,2]") != std::string::npos);
  CHECK(run_cli({"comb", "--word", "1"}).status == kUsage);
}

TEST_CASE("move") {
  const Result up = run_cli({"move", "--kind", "II+", "--word", "-1 -1 -1", "--sign", "-1", "--format", "records"});
  CHECK(up.status == kOk);
  const auto rec = nlohmann::json::parse(up.out);
  CHECK(rec["after"] == "-1 -1 -1 -2");
  CHECK(rec["homfly_preserved"] == true);
  const Result down = run_cli({"move", "--kind", "II-", "--word", "-1 -1 -1 -2"});
  CHECK(down.status == kOk);
  CHECK(down.out.find("after:  -1 -1 -1") != std::string::npos);
}

TEST_CASE("verify-table") {
  const Result r = run_cli({"verify-table", "--row", "3_1", "--minimality"});
  CHECK(r.status == kOk);
  CHECK(r.out.find("3_1    PASS") != std::string::npos);
  CHECK(r.out.find("minimality 3_1 PASS") != std::string::npos);
  CHECK(run_cli({"verify-table", "--row", "99_1"}).status == kUsage);

  const Result all = run_cli({"verify-table", "--format", "records", "--jobs", "4"});
  CHECK(all.status == kOk);
  std::istringstream lines(all.out);
  std::string line;
  int rows = 0;
  nlohmann::json summary;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j.contains("summary"))
      summary = j;
    else
      ++rows;
  }
  CHECK(rows == 84);
  CHECK(summary["rows"] == 84);
}

TEST_CASE("enumerate and resource caps") {
  const Result r = run_cli({"enumerate", "--max-len", "3"});
  CHECK(r.status == kOk);
  CHECK(r.out.find("-5  (-1; 2,2)  -1 -1 -1") != std::string::npos);
  CHECK(run_cli({"enumerate", "--max-len", "40"}).status == kResourceCap);

  setenv("BRAIDLOOM_MAX_WORD", "5", 1);
  const Result capped = run_cli({"weave", "--word", "1 2 1 2 1 2 -3 -2 1 3 2 -1 -1 3 2"});
  unsetenv("BRAIDLOOM_MAX_WORD");
  braidloom::set_limits(braidloom::Limits{});
  CHECK(capped.status == kResourceCap);
  setenv("BRAIDLOOM_JOBS", "zero", 1);
  CHECK(run_cli({"decode", "-5"}).status == kUsage);
  unsetenv("BRAIDLOOM_JOBS");
}
