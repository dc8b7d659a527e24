#include "doctest.h"

#include "cli.hpp"
#include "json.hpp"

#include <sstream>

using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = ellsub::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli igusa and uv") {
  auto r = run({"igusa", "--sextic", "-1 0 0 0 0 0 1"});
  REQUIRE(r.status == 0);
  auto d = r.doc();
  CHECK(d["J2"] == "240");
  CHECK(d["J4"] == "1620");
  CHECK(d["J6"] == "119880");
  CHECK(d["J10"] == "46656");

  r = run({"igusa", "--sextic", "0 -1 0 0 0 1 0"});
  REQUIRE(r.status == 0);
  CHECK(r.doc()["J10"] == "-256");
  r = run({"igusa", "--uv", "25 -250"});
  REQUIRE(r.status == 0);
  CHECK(r.doc().contains("absolute"));

  r = run({"uv", "--s", "2 3 6"});
  REQUIRE(r.status == 0);
  CHECK(r.doc()["u"] == "1");
  CHECK(r.doc()["v"] == "25/12");
}

TEST_CASE("cli jpair and classify") {
  auto d = run({"jpair", "--uv", "225 6750"}).doc();
  CHECK(d["split"] == json::array({"54000", "54000"}));
  d = run({"jpair", "--uv", "0 0"}).doc();
  CHECK(d["e1"] == "0");
  CHECK(d["e2"] == "0");

  d = run({"classify", "--uv", "5 150"}).doc();
  CHECK(d["group"] == "D12");
  CHECK(d["involution_classes"] == 2);
  d = run({"classify", "--sextic", "0 -1 0 0 0 0 1"}).doc();
  CHECK(d["group"] == "Z10");
  CHECK(d["uv_preimages"].empty());
}

TEST_CASE("cli l2, invert and embed") {
  auto d = run({"l2", "--sextic", "0 -1 0 0 0 0 1"}).doc();
  CHECK(d["on_locus"] == false);
  d = run({"l2", "--points", "1 -1 2 -2 3 -3"}).doc();
  CHECK(d["on_locus"] == true);
  CHECK(d["has_elliptic_involution"] == true);

  d = run({"invert", "--sextic", "-1 0 0 0 0 0 1"}).doc();
  CHECK(d["preimages"].size() == 2);

  auto r = run({"embed", "--j", "1728"});
  REQUIRE(r.status == 0);
  d = r.doc();
  auto j = run({"jpair", "--uv", d["uv"]["u"].get<std::string>() + " " +
                                     d["uv"]["v"].get<std::string>()})
               .doc();
  CHECK(j["split"] == json::array({"1728", "1728"}));
}

TEST_CASE("cli tuples") {
  auto r = run({"tuples", "count", "--case", "4", "--n", "7"});
  REQUIRE(r.status == 0);
  auto d = r.doc();
  CHECK(d["count"] == 2);
  CHECK(d["certified"] == true);
  CHECK(d["representatives"].size() == 2);

  r = run({"tuples", "count", "--case", "1", "--n", "7"});
  CHECK(r.status == 1);
  CHECK(json::parse(r.err)["error"] == "congruence-excluded");

  r = run({"tuples", "count", "--case", "1", "--n", "9", "--mode", "random", "--budget",
           "2000", "--seed", "5"});
  REQUIRE(r.status == 0);
  CHECK(r.doc()["count"].get<int>() <= 3);
  CHECK(r.doc()["complete"] == false);

  d = run({"tuples", "translate", "--case", "2", "--n", "7", "--sigma", "(2,4)(3,5)(6,7)",
           "--tau", "(1,2,3)(4,5,6)"})
          .doc();
  std::vector<std::string> args = {"tuples", "check", "--case", "2", "--n", "7"};
  for (auto &p : d["tuple"]) {
    args.push_back("--perm");
    args.push_back(p.get<std::string>());
  }
  d = run(args).doc();
  CHECK(d["valid"] == true);
  CHECK(d["symmetric"] == true);
}

TEST_CASE("cli verify-identities is deterministic") {
  auto a = run({"verify-identities", "--samples", "3", "--seed", "9"});
  auto b = run({"verify-identities", "--samples", "3", "--seed", "9"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  auto e = run({"verify-identities", "--samples", "0"});
  CHECK(e.status == 0);
  CHECK(e.out.empty());
}

TEST_CASE("cli usage and domain errors") {
  CHECK(run({}).status == 64);
  CHECK(run({"bogus"}).status == 64);
  CHECK(run({"jpair"}).status == 64);
  CHECK(run({"jpair", "--uv", "x y"}).status == 1);
  CHECK(run({"jpair", "--uv", "9 54"}).status == 1);
  CHECK(run({"igusa", "--sextic", "1 2"}).status == 1);
  CHECK(run({"--help"}).status == 0);
}
