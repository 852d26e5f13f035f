#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "andre/config.hpp"
#include "andre/count_table.hpp"

namespace andre {

/// Power series in z truncated after z^order, with exact rational
/// coefficients. Binary operations on series of different orders truncate
/// to the smaller order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<mpq_class> coeffs);

  static TruncatedSeries constant(const mpq_class& c, int order);
  /// The series z.
  static TruncatedSeries identity(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const mpq_class& operator[](int k) const { return coeffs_.at(k); }
  mpq_class& operator[](int k) { return coeffs_.at(k); }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

  /// k! * [z^k], when that is an integer.
  std::optional<mpz_class> egf_integer(int k) const;

  TruncatedSeries truncated(int order) const;
  /// Derivative; known through order()-1.
  TruncatedSeries derivative() const;
  /// Antiderivative with zero constant term; known through order()+1.
  TruncatedSeries integral() const;
  /// f(c z).
  TruncatedSeries scaled_argument(const mpq_class& c) const;
  /// f(g(z)); requires g[0] == 0.
  TruncatedSeries compose(const TruncatedSeries& inner) const;
  /// 1/f; requires f[0] != 0.
  TruncatedSeries reciprocal() const;
  /// log f; requires f[0] == 1.
  TruncatedSeries log() const;
  /// exp f; requires f[0] == 0.
  TruncatedSeries exp() const;
  TruncatedSeries pow(unsigned exponent) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const mpq_class& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= -1; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const mpq_class& c) {
    return a *= c;
  }
  friend TruncatedSeries operator*(const mpq_class& c, TruncatedSeries a) {
    return a *= c;
  }

  /// Coefficientwise equality over the common order.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<mpq_class> coeffs_;
};

TruncatedSeries sin_series(int order);
TruncatedSeries cos_series(int order);
TruncatedSeries sec_series(int order);
TruncatedSeries tan_series(int order);
/// sec z + tan z.
TruncatedSeries sec_plus_tan(int order);
/// -ln(1 - sin z) = integral of (sec z + tan z).
TruncatedSeries neg_log_one_minus_sin(int order);

/// Power series in z (through z^order) whose coefficients are polynomials in
/// y with exact rational coefficients.
class BivariateSeries {
 public:
  BivariateSeries(int order, int y_degree);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int y_degree() const noexcept { return y_degree_; }
  /// [y^j z^k]; zero for j beyond the stored degree.
  mpq_class at(int k, int j) const;
  void set(int k, int j, const mpq_class& c);
  const std::vector<mpq_class>& y_polynomial(int k) const { return coeffs_.at(k); }

  TruncatedSeries specialize_y(const mpq_class& y) const;
  /// d/dy evaluated at the given y.
  TruncatedSeries y_derivative_at(const mpq_class& y) const;
  /// [y^j] as a series in z.
  TruncatedSeries y_coefficient(int j) const;

 private:
  int y_degree_;
  std::vector<std::vector<mpq_class>> coeffs_;
};

/// e_1..e_count with e_n = (n-1)! [z^(n-1)] (sec z + tan z): 1,1,1,2,5,16,...
std::vector<mpz_class> euler_numbers(int count);

/// (1/(1 - sin z))^y = exp(y L), L = -ln(1 - sin z), computed from the
/// differential equation dF/dz = y L'(z) F. y-degrees above y_max are dropped.
BivariateSeries ftilde(int order, int y_max);
inline BivariateSeries ftilde(int order) { return ftilde(order, order); }

/// entry(n, m) = (n-1)! [y^(m-1) z^(n-1)] ftilde for 1 <= m <= n <= n_max.
CountTable table_lr_from_series(int n_max);

/// Checks (1/m!) (sum e_n z^n/n!)^m against the m+1 column of the series lr
/// table through z^order, and [y^m] ftilde against L^m / m!.
bool euler_power_identity(int m, int order);

/// -ln(1 - sin z) / (1 - sin z).
TruncatedSeries cycle_egf(int order);

/// Generating function of trees whose max-path has length two, assembled
/// from the sec+tan-1 and integral(sec+tan) factors by the merge count
/// C(n+m-1, m).
TruncatedSeries f2_series(int order);

/// Checks f2'' = integral(sec+tan) * (sec+tan-1)' = cycle_egf through
/// z^(order-2), together with each intermediate closed form of the logarithm
/// simplification.
bool f2_identity_check(int order);

/// Exact truncation of F(x,y,z) = sum over trees of x^o y^l z^n / n!,
/// assembled from tree statistics for n <= order.
class TrivariateTruncation {
 public:
  explicit TrivariateTruncation(int order) : order_(order) {}

  /// From brute-force enumeration of B_1..B_order.
  static TrivariateTruncation from_trees(int order, int bound = tree_size_bound());

  int order() const noexcept { return order_; }
  /// [x^o y^l z^n].
  mpq_class coeff(int o, int l, int n) const;
  void add(int o, int l, int n, const mpq_class& c) { coeffs_[{o, l, n}] += c; }
  const std::map<std::tuple<int, int, int>, mpq_class>& coeffs() const noexcept {
    return coeffs_;
  }

 private:
  int order_;
  std::map<std::tuple<int, int, int>, mpq_class> coeffs_;
};

struct PdeResidual {
  mpq_class max_abs;      // largest |residual coefficient| over z-degree <= order-1
  bool boundary_ok = false;  // F(x, y, 0) == 0
  int monomials_checked = 0;
};

/// Residual of (1-x-y)F - xy - x(1-2x)F_x - (xz-1)F_z, coefficientwise.
PdeResidual pde_residual(const TrivariateTruncation& f);

/// "k num/den" per order, followed by "k! * coeff = m" when integral.
std::string dump_series(const TruncatedSeries& s);
/// Per z-order and y-degree: "k y^j num/den" and "k! * [y^j] coeff = m".
std::string dump_series(const BivariateSeries& s);

}  // namespace andre
