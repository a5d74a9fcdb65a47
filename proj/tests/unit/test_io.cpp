#include "doctest.h"

#include <sstream>

#include "evalcode/error.hpp"
#include "evalcode/io.hpp"
#include "evalcode/parse.hpp"
#include "evalcode/repro.hpp"
#include "support.hpp"

using namespace evalcode;

TEST_SUITE("io") {

TEST_CASE("weight report JSON") {
  const EvaluationCode c = toric_hypersimplex_code(3, 4, 2);
  const nlohmann::json j = to_json(ghw(c, 1), c.order());
  CHECK(j["r"] == 1);
  CHECK(j["value"] == 4);
  CHECK(j["status"] == "exact");
  CHECK(j["fp"].is_number());
  REQUIRE(j["witness"].size() == 1);
  const Polynomial w = parse_polynomial(j["witness"][0].get<std::string>(), c.field(), 4);
  CHECK(c.length() - support::oracle_zeros(std::span<const Polynomial>(&w, 1), c.points()) == 4);
  SearchOptions o;
  o.with_footprint = false;
  CHECK(to_json(ghw(c, 1, o))["fp"].is_null());
  CHECK(to_string(WeightStatus::upper_bound) == "upper_bound");
}

TEST_CASE("code metadata JSON") {
  const EvaluationCode c = squarefree_code(3, 2, 1);
  const nlohmann::json j = code_metadata(c);
  CHECK(j["length"] == 4);
  CHECK(j["dimension"] == 3);
  CHECK(j["q"] == 3);
  CHECK(j["order"] == "grevlex");
  CHECK(j["basis"] == nlohmann::json({"t1", "t2", "1"}));
  CHECK(j["leading_monomials"].size() == 3);
}

TEST_CASE("generator TSV round trip") {
  for (const std::uint32_t q : {3u, 4u, 9u, 25u}) {
    const FieldPtr k = FiniteField::of_order(q);
    const PointSet X = support::random_points(k, 2, 10);
    const EvaluationCode c = rm_code(X, 2);
    const std::string text = generator_tsv(c);
    CHECK(text.rfind(std::to_string(c.dimension()) + " " + std::to_string(X.size()) + " " + std::to_string(q) + "\n", 0) == 0);
    std::istringstream in(text);
    CHECK(read_generator_tsv(in, *k) == c.generator_matrix());
  }
}

TEST_CASE("generator TSV errors") {
  const FieldPtr f3 = FiniteField::make(3);
  std::istringstream wrong_q("1 2 5\n1\t2\n");
  CHECK_THROWS_AS(read_generator_tsv(wrong_q, *f3), ParseError);
  std::istringstream short_row("1 3 3\n1\t2\n");
  CHECK_THROWS_AS(read_generator_tsv(short_row, *f3), ParseError);
  std::istringstream missing("2 2 3\n1\t2\n");
  CHECK_THROWS_AS(read_generator_tsv(missing, *f3), ParseError);
  std::istringstream bad("1 2 3\n1\tz\n");
  try {
    read_generator_tsv(bad, *f3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("worked example fixtures") {
  const auto ids = repro_ids();
  CHECK(ids.size() == 12);
  CHECK_THROWS_AS(run_repro("nope"), std::invalid_argument);
  const ReproResult r = run_repro("5points");
  CHECK(r.pass());
  CHECK_FALSE(r.checks.empty());
}

}
