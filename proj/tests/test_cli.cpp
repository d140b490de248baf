#include <doctest.h>

#include <sstream>

#include "soergel_cli/cli.hpp"
#include "soergel_cli/emit.hpp"

using namespace soergel;
using namespace soergel::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run call(std::vector<std::string> args) {
  args.insert(args.begin(), "soergel");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("emit") {
  Output o;
  o.table = Table{{"a", "b"}, {}};
  CHECK(emit(o, Format::kCsv) == "a,b\n");
  CHECK(laurent_string(LaurentPoly::parse("v+v^-1")) == "v^-1+v");
  Output d;
  d.doc = {{"b", 1}, {"a", {{"z", "x,y"}, {"c", 2}}}};
  CHECK(emit(d, Format::kJson) == "{\n  \"a\": {\n    \"c\": 2,\n    \"z\": \"x,y\"\n  },\n  \"b\": 1\n}\n");
  CHECK(emit(d, Format::kCsv) == "key,value\na.c,2\na.z,\"x,y\"\nb,1\n");
  CHECK_THROWS_AS((void)parse_format("xml"), std::invalid_argument);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == kExitUsage);
  Run bad = call({"kl", "--rank", "3", "--w", "1", "--bogus"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("Usage") != std::string::npos);
  CHECK(call({"kl", "--w", "1"}).code == kExitUsage);
  CHECK(call({"kl", "--rank", "9", "--w", "1"}).code == kExitUsage);
  CHECK(call({"kl", "--rank", "3", "--w", "1,7"}).code == kExitUsage);
  CHECK(call({"koszulity", "--rank", "4"}).code == kExitUsage);
  CHECK(call({"endo", "--rank", "4"}).code == kExitUsage);
  CHECK(call({"--format", "xml", "coinv", "--rank", "2"}).code == kExitUsage);
  Run help = call({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("koszul-square") != std::string::npos);
  CHECK(call({"koszulity", "--rank", "2"}).code == kExitOk);
}

TEST_CASE("kl and bs examples") {
  Run kl = call({"kl", "--rank", "3", "--w", "1,2,1"});
  REQUIRE(kl.code == kExitOk);
  Json j = Json::parse(kl.out);
  CHECK(j["kl"].size() == 6);
  for (const auto& [x, p] : j["kl"].items()) CHECK(LaurentPoly::parse(p.get<std::string>()).is_monomial());
  CHECK(j["b_w"]["terms"].size() == 6);
  CHECK(j["b_w"]["terms"][0]["w"] == "123");

  Run bs = call({"bs", "--rank", "3", "--word", "1,2,1", "--decompose"});
  REQUIRE(bs.code == kExitOk);
  Json b = Json::parse(bs.out);
  std::map<std::pair<WeylElement, int>, int> expect{{{WeylElement::parse("321"), 0}, 1},
                                                    {{WeylElement::parse("213"), 0}, 1}};
  CHECK(summands_from_json(b["summands"]) == expect);
  CHECK(b["verified"] == true);
}

TEST_CASE("decomposition round trip") {
  Run d = call({"decompose", "--rank", "3", "--word", "1,2,2,1"});
  REQUIRE(d.code == kExitOk);
  Json j = Json::parse(d.out);
  CHECK(j.dump(2) + "\n" == d.out);
  CHECK(summands_json(summands_from_json(j["summands"])) == j["summands"]);
}

TEST_CASE("commands produce parseable output") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"hom", "--rank", "3", "--x", "1", "--y", "1,2,1"},
           {"hom", "--rank", "2", "--x", "1", "--y", "1,1", "--bs"},
           {"coinv", "--rank", "3"},
           {"endo", "--rank", "3", "--w", "1,2,1"},
           {"endo", "--rank", "2"},
           {"tate", "--seed", "3", "--cases", "20"},
           {"tate", "--demo", "--cases", "5"},
           {"koszul-square", "--rank", "2", "--seed", "1", "--cases", "20"},
           {"ext", "--rank", "3", "--x", "e", "--y", "1,2,1"},
           {"koszulity", "--rank", "1"},
       }) {
    Run r = call(args);
    CHECK(r.code == kExitOk);
    CHECK(!Json::parse(r.out).is_null());
  }
  Json e = Json::parse(call({"endo", "--rank", "2"}).out);
  CHECK(e["dim"] == 5);
  Json sq = Json::parse(call({"koszul-square", "--rank", "3", "--seed", "7", "--cases", "30"}).out);
  CHECK(sq["failures"] == 0);
  CHECK(sq["cases"] == 30);
}

TEST_CASE("formats and determinism") {
  for (const char* f : {"json", "csv", "text"}) {
    Run a = call({"--format", f, "ext", "--rank", "2", "--x", "1", "--y", "e"});
    Run b = call({"ext", "--rank", "2", "--x", "1", "--y", "e", "--format", f});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
  Run s1 = call({"selftest", "--seed", "5", "--criterion", "7", "--criterion", "10"});
  Run s2 = call({"selftest", "--seed", "5", "--criterion", "7", "--criterion", "10"});
  CHECK(s1.code == kExitOk);
  CHECK(s1.out == s2.out);
  Json j = Json::parse(s1.out);
  CHECK(j["criteria"].size() == 2);
}

TEST_CASE("tate demo battery") {
  const auto r = call({"tate", "--demo", "--seed", "1", "--cases", "5"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  REQUIRE(j["demo"].size() == 3);
  for (const auto& w : j["demo"]) CHECK(w["pass"].get<bool>());
}
