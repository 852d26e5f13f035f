#include <doctest.h>

#include <json.hpp>

#include "andre/count_table.hpp"

using namespace andre;

namespace {

CountTable small_table(Engine engine) {
  CountTable t(Statistic::lr, engine, 3);
  t.set(1, 1, 1);
  t.set(2, 2, 1);
  t.set(3, 2, 1);
  t.set(3, 3, 1);
  return t;
}

}  // namespace

TEST_CASE("names round trip") {
  for (Statistic s : {Statistic::lr, Statistic::rl}) CHECK(parse_statistic(to_string(s)) == s);
  for (Engine e : {Engine::brute, Engine::eco, Engine::series, Engine::recursion}) {
    CHECK(parse_engine(to_string(e)) == e);
  }
  CHECK_FALSE(parse_engine("magic").has_value());
  CHECK_FALSE(parse_statistic("").has_value());
}

TEST_CASE("cells, defaults and row sums") {
  CountTable t = small_table(Engine::brute);
  CHECK(t.at(3, 1) == 0);
  CHECK_FALSE(t.defined(3, 1));
  CHECK(t.row_sum(3) == 2);
  t.add(3, 3, 4);
  CHECK(t.at(3, 3) == 5);
  t.fill_zeros_full_rows();
  CHECK(t.defined(3, 1));
  CHECK(t.at(3, 1) == 0);
  CHECK(t.cells().size() == 9);
}

TEST_CASE("csv layout") {
  const std::string csv = small_table(Engine::eco).to_csv();
  CHECK(csv == "n,stat,count,engine\n1,1,1,eco\n2,2,1,eco\n3,2,1,eco\n3,3,1,eco\n");
}

TEST_CASE("json keeps counts as strings") {
  CountTable t(Statistic::rl, Engine::series, 2);
  t.set(2, 1, mpz_class("123456789012345678901234567890"));
  const auto doc = nlohmann::json::parse(t.to_json());
  CHECK(doc["statistic"] == "rl");
  CHECK(doc["engine"] == "series");
  CHECK(doc["n_max"] == 2);
  REQUIRE(doc["entries"].size() == 1);
  CHECK(doc["entries"][0]["n"] == 2);
  CHECK(doc["entries"][0]["stat"] == 1);
  CHECK(doc["entries"][0]["count"] == "123456789012345678901234567890");
}

TEST_CASE("pretty layout") {
  const std::string pretty = small_table(Engine::brute).to_pretty();
  CHECK(pretty ==
        "# lr table (brute)\n"
        "n/m  2  3\n"
        "  2  1  .\n"
        "  3  1  1\n");
  CountTable rl(Statistic::rl, Engine::eco, 1);
  rl.set(1, 1, 1);
  CHECK(rl.first_shown() == 1);
  CHECK(rl.to_pretty() == "# rl table (eco)\nn/r  1\n  1  1\n");
}

TEST_CASE("first_discrepancy") {
  const CountTable a = small_table(Engine::brute);
  CountTable b = small_table(Engine::eco);
  CHECK_FALSE(first_discrepancy(a, b).has_value());
  b.set(3, 3, 2);
  b.set(3, 2, 7);
  const auto d = first_discrepancy(a, b);
  REQUIRE(d.has_value());
  CHECK(d->n == 3);
  CHECK(d->s == 2);
  CHECK(d->left_value == 1);
  CHECK(d->right_value == 7);
  CHECK(d->describe() == "lr n=3 stat=2: brute=1 vs eco=7");

  // Cells defined only on one side are skipped.
  CountTable partial(Statistic::lr, Engine::series, 3);
  partial.set(2, 2, 1);
  CHECK_FALSE(first_discrepancy(a, partial).has_value());
}
