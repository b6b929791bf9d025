#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "hopfcoh/cli/cli.hpp"
#include "hopfcoh/cli/definitions.hpp"
#include "hopfcoh/errors.hpp"

using namespace hopfcoh;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(HOPFCOH_DATA_DIR) + "/" + file; }

std::vector<std::string> column(const json& table, std::size_t c) {
  std::vector<std::string> out;
  for (const auto& row : table["rows"]) out.push_back(row[c].get<std::string>());
  return out;
}

}  // namespace

TEST_CASE("gs on a builtin reports degree 0 of dimension 1") {
  auto r = run({"gs", "group-algebra:2:q", "--max-degree", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(column(j["tables"][0], 2) == std::vector<std::string>{"1", "0", "0", "0"});
}

TEST_CASE("koszul-sv reports the exterior binomials") {
  auto r = run({"koszul-sv", "--dim", "2", "--max-internal-degree", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  auto ranks = column(json::parse(r.out)["tables"][0], 2);
  CHECK(std::vector<std::string>(ranks.begin(), ranks.begin() + 5) == std::vector<std::string>{"1", "4", "6", "4", "1"});
}

TEST_CASE("integral Hochschild cohomology of Z[C2] has torsion") {
  auto r = run({"hochschild", "group-ring:2:z", "--max-degree", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  auto torsion = column(json::parse(r.out)["tables"][0], 3);
  CHECK(std::any_of(torsion.begin(), torsion.end(), [](const std::string& s) { return !s.empty(); }));
}

TEST_CASE("reports are reproducible for a fixed seed") {
  std::vector<std::string> args{"eta-check", "split:group-algebra:2", "rebased-split:0:group-algebra:2",
                                "--samples", "3", "--seed", "5", "--format", "csv"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("definition files load and are validated") {
  auto ok = cli::load(data("sweedler_h4.json"));
  REQUIRE(ok.objects.size() == 1);
  CHECK(ok.objects[0].base.bialgebra->dim == 4);
  CHECK(ok.objects[0].checks.ok());
  CHECK(run({"check", data("sweedler_h4.json")}).code == 0);

  auto bad = run({"check", data("bad_coassociativity.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("coassociativity") != std::string::npos);

  auto dual = cli::load(data("dual_numbers.json"));
  CHECK(dual.objects.size() == 3);
  CHECK(dual.objects[2].extension->degree() == 1);
}

TEST_CASE("malformed documents are located") {
  try {
    cli::load_text("{\n  \"H\": {\"kind\": \"bialgebra\",\n  \"dim\" 2}\n}", "doc");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).rfind("doc:3:", 0) == 0);
  }
  CHECK_THROWS_WITH_AS(cli::load_text(R"({"A": {"kind": "algebra", "dim": 1, "mult": [[0, 0, 0, 1]], "unit": []}})", "doc"),
                       doctest::Contains("\"p/q\" strings"), InputError);
  CHECK_THROWS_WITH_AS(
      cli::load_text(R"({"A": {"kind": "algebra", "dim": 1, "mult": [[0, 0, 1, "1"]], "unit": [[0, "1"]]}})", "doc"),
      doctest::Contains("out of range"), InputError);
  CHECK_THROWS_WITH_AS(
      cli::load_text(R"({"M": {"kind": "bimodule", "base": "N", "dim": 1}, "N": {"kind": "bimodule", "base": "M", "dim": 1}})",
                     "doc"),
      doctest::Contains("circular"), InputError);
}

TEST_CASE("errors and unsupported combinations exit nonzero") {
  CHECK(run({"gs", "no-such-builtin"}).code == 2);
  CHECK(run({"ext", "group-algebra:2:z", "--method", "pq"}).code == 2);
  CHECK(run({"eta-check", "derivation:1", "--tensor", "2"}).code == 2);
  CHECK(run({"gs"}).code != 0);
  CHECK(run({}).code != 0);
}
