#include "cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace burnside::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("parse_args maps flags onto the command") {
  const Command c =
      parse_args({"certify-am", "--function", "f1", "--max-depth", "16", "--out", "cert.json"});
  CHECK(c.verb == "certify-am");
  CHECK(c.function == "f1");
  CHECK(c.max_depth == 16);
  CHECK(c.out == "cert.json");
  CHECK(c.format == "json");

  const Command e = parse_args({"eval", "--function", "b", "--x", "1"});
  CHECK(e.verb == "eval");
  CHECK(e.xs == std::vector<std::string>{"1"});
  CHECK(e.format == "csv");

  const Command v = parse_args({"verify-cm", "--theorem1", "--item", "5", "--step", "0.5",
                                "--count", "32", "--max-order", "4", "--digits", "30"});
  CHECK(v.theorem1);
  CHECK(v.item == 5);
  CHECK(v.step == "0.5");
  CHECK(*v.count == 32);
  CHECK(v.max_order == 4);
  CHECK(v.digits == 30);

  const Command n = parse_args({"eval", "--function", "b", "--x", "-0.4"});
  CHECK(n.xs == std::vector<std::string>{"-0.4"});
}

TEST_CASE("parse_args rejects bad input") {
  using Args = std::vector<std::string>;
  for (const Args& args :
       {Args{}, Args{"bogus"}, Args{"eval", "--function", "b"}, Args{"eval", "--x", "1"},
        Args{"eval", "--function", "b", "--kernel", "binet", "--x", "1"},
        Args{"eval", "--function", "b", "--x", "one"},
        Args{"eval", "--function", "b", "--x", "1", "--bogus"},
        Args{"certify-am"}, Args{"certify-am", "--all", "--function", "f1"},
        Args{"verify-cm", "--theorem1"}, Args{"verify-cm", "--theorem1", "--all", "--digits", "20"},
        Args{"verify-cm", "--theorem1", "--all", "--max-order", "11"},
        Args{"verify-cm", "--theorem1", "--item", "9"},
        Args{"verify-lcm", "--theorem1", "--all"}, Args{"verify-cm", "--sign", "2", "--function", "b"},
        Args{"regions", "--family", "Lambda", "--p", "1"}, Args{"bounds"},
        Args{"compare", "--spec", "shifted-root"},
        Args{"eval", "--function", "b", "--x", "1", "--format", "xml"}}) {
    INFO(args.size());
    CHECK_THROWS_AS(parse_args(args), UsageError);
  }
}

TEST_CASE("help") {
  const Command c = parse_args({"--help"});
  CHECK(c.verb == "help");
  for (const char* verb :
       {"eval", "certify-am", "verify-cm", "verify-lcm", "regions", "bounds", "compare", "report"})
    CHECK(c.help_text.find(verb) != std::string::npos);
  const Run r = run_cli({"verify-cm", "--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("--digits") != std::string::npos);
}

TEST_CASE("eval b at 1") {
  const Run r = run_cli({"eval", "--function", "b", "--x", "1", "--no-header"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("function,x,value\nb,1,-0.0271361953669", 0) == 0);
  const Run j = run_cli({"eval", "--kernel", "burnside_b", "--x", "1", "--format", "json", "--no-header"});
  CHECK(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["results"][0]["value"].get<std::string>().rfind("-0.02713619536", 0) == 0);
  CHECK(doc["results"][0]["converged"] == true);
}

TEST_CASE("eval with parameters and errors") {
  const Run r = run_cli({"eval", "--function", "H_lambda", "--lambda", "0.5", "--x", "2", "--no-header"});
  const Run h = run_cli({"eval", "--function", "H", "--x", "2", "--no-header"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.substr(r.out.rfind(',')) == h.out.substr(h.out.rfind(',')));
  CHECK(run_cli({"eval", "--function", "nope", "--x", "1"}).code == kExitUsage);
  const Run d = run_cli({"eval", "--function", "theta", "--x", "-1"});
  CHECK(d.code == kExitUsage);
  CHECK(d.out.empty());
  CHECK_FALSE(d.err.empty());
}

TEST_CASE("certify-am writes the certificate") {
  const std::string path = "test_cli_cert.json";
  const Run r = run_cli({"certify-am", "--function", "f1", "--max-depth", "16", "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const auto doc = nlohmann::json::parse(f);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc.contains("generated"));
  const auto& cert = doc["results"][0]["certificate"];
  std::vector<std::string> limits;
  for (const auto& s : cert["steps"]) limits.push_back(s["limit"].get<std::string>());
  const std::vector<std::string> expected = {"10", "74", "231", "408"};
  CHECK(std::search(limits.begin(), limits.end(), expected.begin(), expected.end()) != limits.end());
  std::remove(path.c_str());
}

TEST_CASE("certify-am exit codes") {
  CHECK(run_cli({"certify-am", "--function", "f3", "--max-depth", "5"}).code == kExitCertification);
  const Run all = run_cli({"certify-am", "--all", "--no-header"});
  CHECK(all.code == kExitOk);
  CHECK(lines(all.out) == 8);
  CHECK(run_cli({"certify-am", "--function", "f9"}).code == kExitUsage);
}

TEST_CASE("verify-cm theorem 1 summary") {
  const Run r = run_cli({"verify-cm", "--theorem1", "--all", "--no-header"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == 9);
  for (int i = 1; i <= 8; ++i)
    CHECK(r.out.find("theorem1-item" + std::to_string(i) + ",cm,0.125,64,8,true,-1,false") !=
          std::string::npos);
}

TEST_CASE("verify-lcm theorem 2 and failing functions") {
  const Run r = run_cli({"verify-lcm", "--theorem2", "--all", "--format", "json", "--no-header"});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["reports"].size() == 8);
  CHECK(doc["pass"] == true);
  CHECK(run_cli({"verify-lcm", "--claim", "theorem2-item3"}).code == kExitOk);
  CHECK(run_cli({"verify-lcm", "--claim", "theorem1-item3"}).code == kExitUsage);
  CHECK(run_cli({"verify-lcm", "--function", "F_alpha", "--alpha", "0.4", "--step", "0.75"}).code ==
        kExitCheckFailed);
  CHECK(run_cli({"verify-lcm", "--function", "g_alpha", "--alpha", "0.6", "--reciprocal",
                 "--step", "0.5", "--max-order", "8"})
            .code == kExitCheckFailed);
  CHECK(run_cli({"verify-cm", "--function", "b", "--sign", "1"}).code == kExitCheckFailed);
  CHECK(run_cli({"verify-cm", "--function", "b", "--sign", "-1", "--step", "0.25"}).code == kExitOk);
}

TEST_CASE("regions") {
  const Run r = run_cli({"regions", "--all", "--no-header"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == 12);
  const Run u = run_cli({"regions", "--family", "Lambda", "--p", "2", "--q", "0.3", "--no-header"});
  CHECK(u.code == kExitOk);
  CHECK(u.out.find("unclassified") != std::string::npos);
  CHECK(run_cli({"regions", "--family", "Psi", "--p", "1", "--q", "1"}).code == kExitUsage);
}

TEST_CASE("bounds and compare") {
  const Run b = run_cli({"bounds", "--all", "--format", "json", "--no-header"});
  CHECK(b.code == kExitOk);
  CHECK(nlohmann::json::parse(b.out)["bounds"].size() == 8);
  const Run k = run_cli({"bounds", "--spec", "half-shift:k=2", "--x", "10", "--no-header"});
  CHECK(k.code == kExitOk);
  CHECK(k.out.find("half-shift,10,,3628800,") != std::string::npos);
  CHECK(run_cli({"bounds", "--spec", "stirling-k", "--k", "6", "--x", "1"}).code == kExitUsage);
  CHECK(run_cli({"bounds", "--spec", "shifted-root", "--x", "0"}).code == kExitUsage);

  const Run c = run_cli({"compare", "--spec", "h-constants", "--spec", "half-shift", "--format",
                         "json", "--no-header"});
  CHECK(c.code == kExitOk);
  const auto doc = nlohmann::json::parse(c.out);
  CHECK(doc["asymptotic_winner"] == "half-shift");
  CHECK(doc["right_ratio"].get<std::string>().rfind("1.0110", 0) == 0);
}

TEST_CASE("output is byte-identical without the header") {
  const std::vector<std::string> args = {"verify-lcm", "--theorem2", "--item", "5", "--format",
                                         "json", "--no-header"};
  CHECK(run_cli(args).out == run_cli(args).out);
  const Run h = run_cli({"eval", "--function", "b", "--x", "1"});
  CHECK(h.out.rfind("# burnside eval generated ", 0) == 0);
}
