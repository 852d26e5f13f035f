#include <doctest.h>

#include "andre/eco.hpp"
#include "andre/engines.hpp"
#include "andre/series.hpp"
#include "andre/stat_polynomial.hpp"
#include "andre/verify.hpp"
#include "reference_tables.hpp"

using namespace andre;

TEST_CASE("lr rule start and first steps") {
  const auto s1 = eco_lr_start();
  CHECK(s1.level == 1);
  CHECK(s1.total() == 1);
  CHECK(s1.multiplicity.at(LrLabel{1, 1, 1}) == 1);
  // (1,1,1) -> (1,2,2) only: o-1 = 0 and n-2o+1 = 0.
  const auto s2 = eco_lr_step(s1);
  REQUIRE(s2.multiplicity.size() == 1);
  CHECK(s2.multiplicity.at(LrLabel{1, 2, 2}) == 1);
  // (1,2,2) -> (1,3,3) and (2,2,3).
  const auto s3 = eco_lr_step(s2);
  CHECK(s3.multiplicity.at(LrLabel{1, 3, 3}) == 1);
  CHECK(s3.multiplicity.at(LrLabel{2, 2, 3}) == 1);
  CHECK(s3.total() == 2);
}

TEST_CASE("eco_lr_expand") {
  const CountTable t = eco_lr_expand(10);
  CHECK(t.at(2, 2) == 1);
  CHECK(t.at(4, 3) == 3);
  CHECK(t.at(9, 2) == 272);
  for (int n = 2; n <= 10; ++n) {
    for (int m = 2; m <= 10; ++m) CHECK(t.at(n, m) == reference::lr_entry(n, m));
  }
}

TEST_CASE("eco_rl_expand") {
  const CountTable t = eco_rl_expand(10);
  CHECK(t.at(3, 2) == 1);
  CHECK(t.at(6, 2) == 38);
  CHECK(t.at(10, 5) == 21);
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= 10; ++r) CHECK(t.at(n, r) == reference::rl_entry(n, r));
  }
}

TEST_CASE("generating tree level totals are Euler numbers") {
  const auto e = euler_numbers(13);
  auto lr = eco_lr_start();
  auto rl = eco_rl_start();
  for (int n = 1; n <= 12; ++n) {
    CHECK(lr.total() == e[n]);
    CHECK(rl.total() == e[n]);
    for (const auto& [label, count] : rl.multiplicity) {
      CHECK(label.n == n);
      CHECK(label.d == n - 2 * label.o + 1);
      CHECK_FALSE((label.cls == TreeClass::A && label.d == 0));
      CHECK(count > 0);
    }
    lr = eco_lr_step(lr);
    rl = eco_rl_step(rl);
  }
}

TEST_CASE("rl labels agree with brute-force label counts") {
  // Oracle: tally (o, r, class, d) directly over B_n.
  auto level = eco_rl_start();
  for (int n = 1; n <= 9; ++n) {
    std::map<RlLabel, mpz_class> brute;
    for_each_tree(n, [&](const IncreasingTree& t) {
      const TreeStatistics s = stats(t);
      brute[RlLabel{s.o, s.r, n, s.cls, s.d}] += 1;
    });
    CHECK(level.multiplicity == brute);
    level = eco_rl_step(level);
  }
}

TEST_CASE("lr labels agree with brute-force label counts") {
  auto level = eco_lr_start();
  for (int n = 1; n <= 9; ++n) {
    std::map<LrLabel, mpz_class> brute;
    for_each_tree(n, [&](const IncreasingTree& t) {
      const TreeStatistics s = stats(t);
      brute[LrLabel{s.o, s.l, n}] += 1;
    });
    CHECK(level.multiplicity == brute);
    level = eco_lr_step(level);
  }
}

TEST_CASE("g_step small cases") {
  const GPair g1 = g_start();
  CHECK(g1.a.is_zero());
  CHECK(g1.b.step() == 1);
  CHECK(g1.b.coeff(Monomial{1, 1, 0}) == 1);

  const GPair g2 = g_step(g1);
  CHECK(g2.a.step() == 2);
  CHECK(g2.a.terms().size() == 1);
  CHECK(g2.a.coeff(Monomial{1, 1, 1}) == 1);
  CHECK(g2.b.is_zero());

  const GPair g3 = g_step(g2);
  CHECK(g3.a.terms().size() == 1);
  CHECK(g3.a.coeff(Monomial{1, 1, 2}) == 1);
  CHECK(g3.b.terms().size() == 1);
  CHECK(g3.b.coeff(Monomial{2, 2, 0}) == 1);

  const GPair zero = g_step(GPair{StatPolynomial(4), StatPolynomial(4)});
  CHECK(zero.a.is_zero());
  CHECK(zero.b.is_zero());
  CHECK(zero.a.step() == 5);
}

TEST_CASE("g recursion matches brute-force polynomials") {
  GPair g = g_start();
  for (int n = 1; n <= 10; ++n) {
    const GPair brute = brute_stat_polynomials(n);
    CHECK(g.a == brute.a);
    CHECK(g.b == brute.b);
    g = g_step(g);
  }
}

TEST_CASE("g_table") {
  const CountTable t = g_table(10);
  CHECK(t.at(5, 3) == 1);
  CHECK(t.at(8, 4) == 13);
  CHECK(t.at(6, 4) == 0);
  CHECK(t.defined(6, 4));
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= 10; ++r) CHECK(t.at(n, r) == reference::rl_entry(n, r));
  }
}

TEST_CASE("StatPolynomial operations") {
  StatPolynomial p(3);
  p.add(Monomial{2, 1, 1}, 3);
  p.add(Monomial{1, 1, 0}, 2);
  CHECK(p.d_dx().coeff(Monomial{1, 1, 1}) == 6);
  CHECK(p.d_dx().coeff(Monomial{0, 1, 0}) == 2);
  CHECK(p.d_dv().coeff(Monomial{2, 1, 0}) == 3);
  CHECK(p.d_dv().terms().size() == 1);
  CHECK(p.at_v_zero().coeff(Monomial{1, 1, 0}) == 2);
  CHECK_THROWS_AS(p.divide_by_v(), InvariantViolation);
  StatPolynomial with_v = p;
  with_v -= p.at_v_zero();
  CHECK(with_v.divide_by_v().coeff(Monomial{2, 1, 0}) == 3);
  const auto shifted = p.times(-1, Monomial{0, 0, 1}, 1);
  CHECK(shifted.step() == 4);
  CHECK(shifted.has_negative_coefficient());
  StatPolynomial q = p;
  q -= p;
  CHECK(q.is_zero());
}

TEST_CASE("brute tables") {
  const CountTable lr = brute_table(Statistic::lr, 10);
  const CountTable rl = brute_table(Statistic::rl, 10);
  CHECK(lr.at(6, 4) == 25);
  CHECK(rl.at(9, 4) == 136);
  CHECK(lr.at(1, 1) == 1);
  CHECK(brute_table(Statistic::lr, 1).at(1, 1) == 1);
  CHECK_THROWS_AS(brute_table(Statistic::lr, 13), BoundExceeded);
  for (int n = 2; n <= 10; ++n) {
    for (int m = 2; m <= 10; ++m) CHECK(lr.at(n, m) == reference::lr_entry(n, m));
  }
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= 10; ++r) CHECK(rl.at(n, r) == reference::rl_entry(n, r));
  }
}

TEST_CASE("series_rl_table covers the first two columns") {
  const CountTable t = series_rl_table(10);
  for (int n = 1; n <= 10; ++n) {
    CHECK(t.at(n, 1) == reference::rl_entry(n, 1));
    CHECK(t.at(n, 2) == reference::rl_entry(n, 2));
    CHECK_FALSE(t.defined(n, 3));
  }
}

TEST_CASE("engine_table and engine_supports") {
  CHECK_FALSE(engine_supports(Statistic::lr, Engine::recursion));
  CHECK(engine_supports(Statistic::rl, Engine::recursion));
  CHECK_THROWS_AS(engine_table(Statistic::lr, Engine::recursion, 5), std::invalid_argument);
  CHECK(engine_table(Statistic::lr, Engine::series, 6).engine() == Engine::series);
}

TEST_CASE("cross_check") {
  const CrossCheckReport ok = cross_check(10);
  CHECK(ok.agreement());
  CHECK(ok.comparisons >= 5);
  CHECK(cross_check(1).agreement());

  const CrossCheckReport broken = cross_check(7, LrRulePerturbation{4});
  REQUIRE_FALSE(broken.agreement());
  const Discrepancy& d = *broken.first_discrepancy;
  CHECK(d.statistic == Statistic::lr);
  CHECK(d.n == 5);
  CHECK(d.left_value != d.right_value);
  CHECK(broken.describe().find("n=5") != std::string::npos);
}

TEST_CASE("run_property_suite") {
  for (int n_max : {1, 10}) {
    VerifyOptions options;
    options.n_max = n_max;
    const auto results = run_property_suite(options);
    CHECK_FALSE(results.empty());
    for (const auto& r : results) {
      INFO(r.name << ": " << r.detail);
      CHECK(r.passed);
    }
  }
  VerifyOptions faulty;
  faulty.n_max = 6;
  faulty.perturbation.at_level = 3;
  int failures = 0;
  for (const auto& r : run_property_suite(faulty)) failures += r.passed ? 0 : 1;
  CHECK(failures > 0);
}
