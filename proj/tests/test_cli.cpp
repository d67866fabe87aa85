#include "doctest.h"

#include <sstream>

#include "galsym/cli.hpp"
#include "galsym/random.hpp"
#include "galsym/serialize.hpp"

using namespace galsym;
using io::json;

namespace {

struct Outcome {
  int code;
  std::string text;
  json doc() const { return json::parse(text); }
};

Outcome call(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  const int code = cli::run(args, in, out);
  return {code, out.str()};
}

std::string random_document(std::uint64_t seed) {
  Rng rng(seed);
  const SpaceModel s = random_space(rng, 3);
  const auto [x2, s2] = random_two_pair(rng, s, 20);
  const auto [x3, s3] = random_odd_pair(rng, s, 3, 12);
  const auto [x5, s5] = random_odd_pair(rng, s, 5, 12);
  const EtaleManifold x(s, {{2, x2}, {3, x3}, {5, x5}});
  const EtaleStructure st({{2, s2}, {3, s3}, {5, s5}});
  return json{{"manifold", io::to_json(x)}, {"structure", io::to_json(st)}}.dump();
}

}  // namespace

TEST_CASE("wu") {
  const auto r = call({"wu", "--m", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.doc() == json::parse(
                       R"({"space":"CP^5","class":[{"exps":[0],"coeff":"1"},{"exps":[4],"coeff":"1"}]})"));
  CHECK(call({"wu", "--m", "7", "--oracle"}).text == call({"wu", "--m", "7"}).text);
  CHECK(call({"wu", "--m=-1"}).code == cli::kExitUsage);
}

TEST_CASE("lgenus") {
  const auto r = call({"lgenus", "--space", "CP^2"}).doc();
  CHECK(r["signature"] == "1");
  CHECK(r["ring"] == "Q");
  const auto series = call({"lgenus", "--series", "2"}).doc();
  CHECK(series["series"] == json::array({"1", "1/3", "-1/45"}));
  CHECK(call({"lgenus", "--space", "CP^2y"}).code == cli::kExitUsage);
  CHECK(call({"lgenus", "--space", "CP^2xCP^4"}).doc()["signature"] == "1");
}

TEST_CASE("kervaire-f") {
  const auto c = call({"kervaire-f", "--mode", "constant", "--invariant", "1", "--count", "3"});
  CHECK(c.code == cli::kExitOk);
  CHECK(c.doc()["f"] == json::array({1, 1, 0}));
  CHECK(c.doc()["pairings"] == json::array({1, 1, 1}));

  const auto p = call({"kervaire-f", "--mode", "preset", "--sigma", "3", "--count", "3"}).doc();
  CHECK(p["f"] == json::array({1, 0, 1}));
  CHECK(p["mode"] == "paper-preset");
  CHECK(p.contains("note"));
  CHECK(call({"kervaire-f", "--mode", "preset", "--sigma", "3", "--count", "4"}).code ==
        cli::kExitDomainError);

  const auto t = call({"kervaire-f", "--mode", "custom", "--table", "1,0,1", "--count", "3"}).doc();
  CHECK(t["pairings"] == json::array({1, 0, 1}));
  CHECK(call({"kervaire-f", "--count", "3", "--bogus"}).code == cli::kExitUsage);
}

TEST_CASE("kervaire-class") {
  const auto r = call({"kervaire-class", "--mode", "preset", "--sigma", "3", "--cp", "6"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.doc()["class"] ==
        json::parse(R"([{"exps":[1],"coeff":"1"},{"exps":[5],"coeff":"1"}])"));
  const std::string roots =
      R"({"space":{"gens":[{"name":"w","trunc":6}]},"roots":[{"class":[{"exps":[1],"coeff":"1"}],"mult":7}]})";
  const auto inline_roots =
      call({"kervaire-class", "--mode", "preset", "--sigma", "3", "--roots", roots});
  CHECK(inline_roots.text == r.text);
  CHECK(call({"kervaire-class", "--sigma", "3"}).code == cli::kExitUsage);
}

TEST_CASE("verify") {
  const auto r = call({"verify", "--suite", "group-laws", "--seed", "7", "--trials", "100"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.doc()["passed"] == 100);
  CHECK(r.doc()["failed"] == 0);
  CHECK(call({"verify", "--suite", "nope", "--seed", "1"}).code == cli::kExitUsage);
  CHECK(call({"verify", "--suite", "all", "--seed", "3", "--trials", "10"}).code == cli::kExitOk);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == cli::kExitUsage);
  CHECK(call({"frobnicate"}).code == cli::kExitUsage);
  CHECK(call({"wu"}).code == cli::kExitUsage);
  CHECK(call({"wu", "--m", "2", "--extra"}).code == cli::kExitUsage);
  CHECK(call({"wu", "--m", "x"}).code == cli::kExitUsage);
  CHECK(call({"wu", "--m", "x"}).doc().contains("error"));
}

TEST_CASE("act and validate") {
  const std::string doc = random_document(5);

  SUBCASE("sigma then its inverse restores the input") {
    const auto once = call({"act", "--input", "-", "--sigma", "7"}, doc);
    REQUIRE(once.code == cli::kExitOk);
    const auto back = call({"act", "--input", "-", "--sigma", "7", "--inverse"}, once.text);
    REQUIRE(back.code == cli::kExitOk);
    CHECK(back.doc() == json::parse(doc));
    CHECK(once.text != doc + "\n");
  }
  SUBCASE("determinism") {
    const auto a = call({"act", "--input", "-", "--sigma", "11", "--mode", "preset"}, doc);
    const auto b = call({"act", "--input", "-", "--sigma", "11", "--mode", "preset"}, doc);
    CHECK(a.text == b.text);
  }
  SUBCASE("adelic sigma in JSON") {
    const auto r = call({"act", "--input", "-", "--sigma", R"({"3":{"precision":12,"residue":"2"}})"},
                        doc);
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.doc()["structure"]["2"] == json::parse(doc)["structure"]["2"]);
    CHECK(r.doc()["structure"]["3"] != json::parse(doc)["structure"]["3"]);
  }
  SUBCASE("validate accepts generated and acted-on documents") {
    const auto v = call({"validate", "--input", "-"}, doc);
    CHECK(v.code == cli::kExitOk);
    CHECK(v.doc()["valid"] == true);
    const auto acted = call({"act", "--input", "-", "--sigma", "13"}, doc);
    CHECK(call({"validate", "--input", "-"}, acted.text).doc()["valid"] == true);
  }
  SUBCASE("errors") {
    CHECK(call({"act", "--input", "-", "--sigma", "6"}, doc).code == cli::kExitDomainError);
    CHECK(call({"act", "--input", "-", "--sigma", "7"}, "{}").code == cli::kExitDomainError);
    CHECK(call({"act", "--input", "/nonexistent.json", "--sigma", "7"}).code == cli::kExitDomainError);
    CHECK(call({"act", "--input", "-"}, doc).code == cli::kExitUsage);
  }
}
