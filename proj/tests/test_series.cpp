#include <doctest.h>

#include "andre/engines.hpp"
#include "andre/permutation.hpp"
#include "andre/series.hpp"
#include "reference_tables.hpp"

using namespace andre;

namespace {

mpz_class egf(const TruncatedSeries& s, int k) {
  auto v = s.egf_integer(k);
  REQUIRE(v.has_value());
  return *v;
}

}  // namespace

TEST_CASE("elementary series identities are exact") {
  const int n = 16;
  const auto sin = sin_series(n);
  const auto cos = cos_series(n);
  const auto sec = sec_series(n);
  const auto tan = tan_series(n);
  const auto one = TruncatedSeries::constant(1, n);
  CHECK(sin * sec == tan);
  CHECK(sec * sec - tan * tan == one);
  CHECK(sin * sin + cos * cos == one);
  const auto f = sec_plus_tan(n);
  CHECK(f.integral().derivative() == f);
  CHECK(sin.derivative() == cos.truncated(n - 1));
}

TEST_CASE("log and exp are inverse") {
  const auto z = TruncatedSeries::identity(12);
  const auto g = z + z * z * mpq_class(3, 7);
  CHECK(g.exp().log() == g);
  CHECK_THROWS_AS((z + TruncatedSeries::constant(2, 12)).log(), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries::constant(1, 12).exp(), std::invalid_argument);
  CHECK_THROWS_AS(z.reciprocal(), std::invalid_argument);
}

TEST_CASE("mismatched orders truncate to the minimum") {
  const auto a = sin_series(5);
  const auto b = cos_series(9);
  CHECK((a + b).order() == 5);
  CHECK((a * b).order() == 5);
  CHECK(a.compose(TruncatedSeries::identity(3)).order() == 3);
}

TEST_CASE("composition") {
  // sin(2z) = 2 sin z cos z
  const int n = 14;
  const auto two_z = TruncatedSeries::identity(n) * mpq_class(2);
  CHECK(sin_series(n).compose(two_z) == sin_series(n) * cos_series(n) * mpq_class(2));
  CHECK(sin_series(n).compose(two_z) == sin_series(n).scaled_argument(2));
  CHECK_THROWS_AS(sin_series(n).compose(TruncatedSeries::constant(1, n)), std::invalid_argument);
}

TEST_CASE("euler_numbers") {
  const auto e = euler_numbers(12);
  REQUIRE(e.size() == 12);
  for (int n = 1; n <= 12; ++n) CHECK(e[n - 1] == reference::kEuler[n - 1]);
  CHECK(e[0] == 1);
  CHECK(e[3] == 2);
  CHECK(e[4] == 5);
  CHECK(e[9] == 7936);
  CHECK(euler_numbers(0).empty());
  CHECK_THROWS_AS(euler_numbers(kMaxSeriesOrder + 1), BoundExceeded);
}

TEST_CASE("ftilde") {
  const auto f = ftilde(10);
  CHECK(f.at(0, 0) == 1);
  CHECK(f.at(1, 1) == 1);
  CHECK(f.at(1, 0) == 0);
  const auto at_one = f.specialize_y(1);
  // 1/(1 - sin z): the sizes of res_1, res_2, ...
  const std::vector<int> shifted_euler = {1, 1, 2, 5, 16};
  for (int k = 0; k <= 4; ++k) CHECK(egf(at_one, k) == shifted_euler[k]);
  // y-degree at z^k never exceeds k.
  for (int k = 0; k <= 10; ++k) {
    for (int j = k + 1; j <= 10; ++j) CHECK(f.at(k, j) == 0);
  }
  // Truncating the y-degree keeps the low coefficients.
  const auto low = ftilde(10, 3);
  CHECK(low.y_degree() == 3);
  for (int k = 0; k <= 10; ++k) {
    for (int j = 0; j <= 3; ++j) CHECK(low.at(k, j) == f.at(k, j));
  }
}

TEST_CASE("ftilde equals (1 - sin z)^(-y) at integer y") {
  // Independent route: repeated multiplication of 1/(1 - sin z).
  const int n = 12;
  const auto f = ftilde(n);
  const auto base = (TruncatedSeries::constant(1, n) - sin_series(n)).reciprocal();
  for (unsigned y = 0; y <= 4; ++y) CHECK(f.specialize_y(y) == base.pow(y));
}

TEST_CASE("table_lr_from_series reproduces the published triangle") {
  const CountTable t = table_lr_from_series(10);
  for (int n = 2; n <= 10; ++n) {
    for (int m = 2; m <= 10; ++m) CHECK(t.at(n, m) == reference::lr_entry(n, m));
  }
  CHECK(t.at(5, 3) == 7);
  CHECK(t.at(10, 4) == 14698);
  for (int n = 2; n <= 10; ++n) CHECK(t.at(n, n) == 1);
  const auto e = euler_numbers(11);
  for (int n = 1; n <= 10; ++n) CHECK(t.row_sum(n) == e[n]);
  CHECK(t.at(1, 1) == 1);
}

TEST_CASE("euler_power_identity") {
  CHECK(euler_power_identity(1, 10));
  CHECK(euler_power_identity(2, 10));
  CHECK(euler_power_identity(9, 9));
  for (int m = 1; m <= 5; ++m) CHECK(euler_power_identity(m, 11));
  CHECK_THROWS_AS(euler_power_identity(0, 5), std::invalid_argument);
}

TEST_CASE("cycle_egf") {
  const auto c = cycle_egf(12);
  CHECK(c[0] == 0);
  for (int n = 1; n <= 12; ++n) CHECK(egf(c, n) == reference::kCycleUpDown[n - 1]);
  // Oracle: brute-force cycle counts over S_n.
  for (int n = 1; n <= 7; ++n) CHECK(egf(c, n) == cycle_up_down_cycle_count(n));
  CHECK(c == ftilde(12).y_derivative_at(1));
}

TEST_CASE("f2_series") {
  const auto f2 = f2_series(12);
  for (int s = 0; s <= 2; ++s) CHECK(f2[s] == 0);
  CHECK(egf(f2, 4) == 3);
  CHECK(egf(f2, 7) == 165);
  for (int s = 3; s <= 10; ++s) CHECK(egf(f2, s) == reference::rl_entry(s, 2));
  // Oracle: brute-force max-path counts.
  const CountTable brute = brute_table(Statistic::rl, 10);
  for (int s = 1; s <= 10; ++s) CHECK(egf(f2, s) == brute.at(s, 2));
}

TEST_CASE("f2_identity_check") {
  CHECK(f2_identity_check(12));
  CHECK(f2_identity_check(3));
  const auto lhs = f2_series(12).derivative().derivative();
  const auto rhs = cycle_egf(12);
  CHECK(lhs[0] == 0);
  CHECK(rhs[0] == 0);
  CHECK(lhs[1] == 1);
  CHECK(rhs[1] == 1);
  CHECK_THROWS_AS(f2_identity_check(2), std::invalid_argument);
}

TEST_CASE("pde_residual of the brute-force trivariate truncation") {
  for (int order : {1, 4, 8}) {
    const auto f = TrivariateTruncation::from_trees(order);
    const PdeResidual r = pde_residual(f);
    CHECK(r.boundary_ok);
    CHECK(r.max_abs == 0);
    CHECK(r.monomials_checked > 0);
  }
  const auto f1 = TrivariateTruncation::from_trees(1);
  CHECK(f1.coeffs().size() == 1);
  CHECK(f1.coeff(1, 1, 1) == 1);

  // A corrupted coefficient is detected.
  auto broken = TrivariateTruncation::from_trees(6);
  broken.add(2, 2, 3, mpq_class(1, 6));
  CHECK(pde_residual(broken).max_abs > 0);
  auto shifted = TrivariateTruncation::from_trees(3);
  shifted.add(1, 1, 0, 1);
  CHECK_FALSE(pde_residual(shifted).boundary_ok);
}

TEST_CASE("series dump format") {
  const std::string dump = dump_series(neg_log_one_minus_sin(3));
  CHECK(dump ==
        "0 0/1\n0! * coeff = 0\n"
        "1 1/1\n1! * coeff = 1\n"
        "2 1/2\n2! * coeff = 1\n"
        "3 1/6\n3! * coeff = 1\n");
  const std::string half = dump_series(TruncatedSeries(std::vector<mpq_class>{mpq_class(1, 2)}));
  CHECK(half == "0 1/2\n");
  const std::string bivariate = dump_series(ftilde(1));
  CHECK(bivariate == "0 y^0 1/1\n0! * [y^0] coeff = 1\n1 y^0 0/1\n1! * [y^0] coeff = 0\n"
                     "1 y^1 1/1\n1! * [y^1] coeff = 1\n");
}
