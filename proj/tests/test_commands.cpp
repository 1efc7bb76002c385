#include <catch_amalgamated.hpp>

#include <sstream>

#include "groupoidkit/commands.hpp"
#include "groupoidkit/generators.hpp"

using namespace gk;
namespace cli = gk::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(GROUPOIDKIT_FIXTURES) + "/" + name; }

struct Run {
  int code;
  json out;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out;
  const int code = f(out);
  return {code, json::parse(out.str())};
}

}  // namespace

TEST_CASE("validate command", "[cli]") {
  const Run ok = run([](auto& o) { return cli::cmd_validate(fixture("trivial.json"), o); });
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out["status"] == "valid");

  const Run broken = run([](auto& o) { return cli::cmd_validate(fixture("broken_inverse.json"), o); });
  CHECK(broken.code == cli::kSemanticFailure);
  REQUIRE_FALSE(broken.out["violations"].empty());
  CHECK(broken.out["violations"][0]["kind"] == "inverse-law");
  CHECK(broken.out["violations"][0]["witness"] == json::parse(R"(["g"])"));

  const Run malformed = run([](auto& o) { return cli::cmd_validate(fixture("malformed.json"), o); });
  CHECK(malformed.code == cli::kInputFailure);
  CHECK(malformed.out.contains("error"));

  CHECK(run([](auto& o) { return cli::cmd_validate(fixture("missing.json"), o); }).code == cli::kInputFailure);
}

TEST_CASE("abelianize command", "[cli]") {
  const Run s3 = run([](auto& o) { return cli::cmd_abelianize(fixture("s3.json"), o); });
  CHECK(s3.code == cli::kOk);
  CHECK(s3.out["abelianization_dim"] == 2);

  const Run bundle = run([](auto& o) { return cli::cmd_abelianize(fixture("s3_a3.json"), o); });
  CHECK(bundle.out["abelianization_dim"] == 5);
  CHECK(bundle.out["dual_bundle"]["total_size"] == 5);

  const Run pair = run([](auto& o) { return cli::cmd_abelianize(fixture("pair2.json"), o); });
  CHECK(pair.code == cli::kOk);
  CHECK(pair.out["abelianization_dim"] == 0);
  CHECK(pair.out["dual_bundle"]["fibers"].empty());

  CHECK(run([](auto& o) { return cli::cmd_abelianize(fixture("broken_inverse.json"), o); }).code ==
        cli::kSemanticFailure);
}

TEST_CASE("quotient command", "[cli]") {
  const Run id = run([](auto& o) { return cli::cmd_quotient(fixture("s3.json"), {"(e,*)"}, o); });
  CHECK(id.code == cli::kOk);
  CHECK(id.out["quotient"]["elements"].size() == 6);
  CHECK(id.out["exact"] == true);

  const Run z2 = run([](auto& o) { return cli::cmd_quotient(fixture("s3.json"), {"(e,*)", "(s,*)", "(s2,*)"}, o); });
  CHECK(z2.code == cli::kOk);
  CHECK(z2.out["quotient"]["elements"].size() == 2);

  const Run bad = run([](auto& o) { return cli::cmd_quotient(fixture("s3.json"), {"(e,*)", "(t,*)"}, o); });
  CHECK(bad.code == cli::kSemanticFailure);
  CHECK(bad.out["witness"]["conjugator"] == "(s,*)");
  CHECK(bad.out["witness"]["member"] == "(t,*)");

  CHECK(run([](auto& o) { return cli::cmd_quotient(fixture("s3.json"), {"(q,*)"}, o); }).code == cli::kInputFailure);
}

TEST_CASE("dual and characters commands", "[cli]") {
  const Run dual = run([](auto& o) { return cli::cmd_dual(fixture("z2.json"), o); });
  CHECK(dual.code == cli::kOk);
  CHECK(dual.out["total_size"] == 2);
  CHECK(dual.out["fibers"][0]["invariant_factors"] == json::parse("[2]"));

  CHECK(run([](auto& o) { return cli::cmd_dual(fixture("s3.json"), o); }).code == cli::kSemanticFailure);

  const Run chars = run([](auto& o) { return cli::cmd_characters(fixture("klein_cross.json"), o); });
  CHECK(chars.code == cli::kOk);
  CHECK(chars.out["count"] == 4);
  for (const auto& phi : chars.out["characters"]) CHECK(phi["unit"] == "(e,c)");
}

TEST_CASE("check command", "[cli]") {
  const Run klein = run([](auto& o) { return cli::cmd_check(fixture("klein_cross.json"), {}, o); });
  CHECK(klein.code == cli::kOk);
  CHECK(klein.out["status"] == "pass");

  const Run corrupted = run([](auto& o) { return cli::cmd_check(fixture("corrupted_klein_cross.json"), {}, o); });
  CHECK(corrupted.code == cli::kSemanticFailure);
  REQUIRE_FALSE(corrupted.out["checks"].empty());
  CHECK(corrupted.out["checks"][0]["name"] == "validate");
  CHECK(corrupted.out["checks"][0]["status"] == "fail");
  for (std::size_t i = 1; i < corrupted.out["checks"].size(); ++i)
    CHECK(corrupted.out["checks"][i]["status"] == "skip");

  const Run corpus = run([](auto& o) { return cli::cmd_check_corpus(7, 50, 60, 1, {}, o); });
  CHECK(corpus.code == cli::kOk);
  CHECK(corpus.out["count"] == 50);
  CHECK(corpus.out["failed"] == 0);

  CHECK(run([](auto& o) { return cli::cmd_check_corpus(0, 1, 0, 1, {}, o); }).code == cli::kInputFailure);
}

TEST_CASE("generate command", "[cli]") {
  cli::GenerateRequest r;
  r.kind = "random";
  r.seed = 3;
  r.count = 4;
  const Run many = run([&](auto& o) { return cli::cmd_generate(r, o); });
  CHECK(many.code == cli::kOk);
  CHECK(many.out.size() == 4);
  CHECK(decode(many.out[1]) == random_groupoid(4, 20));

  r = {};
  r.kind = "bundle";
  r.groups = {"p=S3", "q=A3"};
  const Run bundle = run([&](auto& o) { return cli::cmd_generate(r, o); });
  CHECK(decode(bundle.out) == s3_a3_bundle());

  r.groups = {"p=S7"};
  CHECK(run([&](auto& o) { return cli::cmd_generate(r, o); }).code == cli::kInputFailure);
  r.groups = {"S3"};
  CHECK(run([&](auto& o) { return cli::cmd_generate(r, o); }).code == cli::kInputFailure);
}
