#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "andre/count_table.hpp"
#include "andre/tree.hpp"

namespace andre {

/// Exponents of x (leaves), w (max-path length) and v (outdegree-1 nodes).
struct Monomial {
  int x = 0;
  int w = 0;
  int v = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in x, w, v with integer coefficients, times z^step.
///
/// Every term at a given step has the same z-degree, so z is carried as the
/// step index rather than as a fourth exponent. Zero coefficients are never
/// stored.
class StatPolynomial {
 public:
  StatPolynomial() = default;
  explicit StatPolynomial(int step) : step_(step) {}

  int step() const noexcept { return step_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Monomial, mpz_class>& terms() const noexcept { return terms_; }
  mpz_class coeff(const Monomial& m) const;

  void add(const Monomial& m, const mpz_class& c);

  StatPolynomial& operator+=(const StatPolynomial& rhs);
  StatPolynomial& operator-=(const StatPolynomial& rhs);

  /// Multiplies by c * x^dx w^dw v^dv and z^dz.
  StatPolynomial times(const mpz_class& c, Monomial shift, int dz) const;
  StatPolynomial d_dx() const;
  StatPolynomial d_dv() const;
  /// The v = 0 slice.
  StatPolynomial at_v_zero() const;
  /// Exact division by v; throws InvariantViolation if some term has v^0.
  StatPolynomial divide_by_v() const;

  bool has_negative_coefficient() const;
  std::string to_string() const;

  friend bool operator==(const StatPolynomial&, const StatPolynomial&) = default;

 private:
  int step_ = 0;
  std::map<Monomial, mpz_class> terms_;
};

struct GPair {
  StatPolynomial a;  // class A trees
  StatPolynomial b;  // class B trees
};

/// G_A^(1) = 0, G_B^(1) = xwz.
GPair g_start();

/// One step of the max-path recursion:
///   G_A' = -(xz/v)(G_A - G_A|v=0) + xz dG_A/dv + xvz dG_A/dx + vz G_B
///   G_B' = (xwz/v)(G_A - G_A|v=0) + xz dG_B/dv + xvz dG_B/dx - vz G_B
GPair g_step(const GPair& g);

CountTable g_table(int n_max);

/// Sum over trees of B_n, split by class, of x^o w^r v^d z^n.
GPair brute_stat_polynomials(int n, int bound = tree_size_bound());

}  // namespace andre
