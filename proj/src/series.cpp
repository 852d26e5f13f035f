#include "andre/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "andre/tree.hpp"

namespace andre {

namespace {

mpz_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

mpq_class exact(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  require_series_order(order, "TruncatedSeries");
  coeffs_.assign(order + 1, 0);
}

TruncatedSeries::TruncatedSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: no coefficients");
  require_series_order(order(), "TruncatedSeries");
}

TruncatedSeries TruncatedSeries::constant(const mpq_class& c, int order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

std::optional<mpz_class> TruncatedSeries::egf_integer(int k) const {
  mpq_class scaled = coeffs_.at(k) * factorial(k);
  scaled.canonicalize();
  if (scaled.get_den() != 1) return std::nullopt;
  return mpz_class(scaled.get_num());
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("truncated: order too large");
  return TruncatedSeries(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::derivative() const {
  const int n = order();
  if (n == 0) return TruncatedSeries(0);
  TruncatedSeries d(n - 1);
  for (int k = 1; k <= n; ++k) d[k - 1] = coeffs_[k] * k;
  return d;
}

TruncatedSeries TruncatedSeries::integral() const {
  const int n = order();
  TruncatedSeries s(n + 1);
  for (int k = 0; k <= n; ++k) s[k + 1] = coeffs_[k] / (k + 1);
  return s;
}

TruncatedSeries TruncatedSeries::scaled_argument(const mpq_class& c) const {
  TruncatedSeries s = *this;
  mpq_class power = 1;
  for (auto& coeff : s.coeffs_) {
    coeff *= power;
    power *= c;
  }
  return s;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  if (inner[0] != 0) throw std::invalid_argument("compose: inner series has a constant term");
  const int n = std::min(order(), inner.order());
  TruncatedSeries g = inner.truncated(n);
  TruncatedSeries result = constant(coeffs_[n], n);
  for (int k = n - 1; k >= 0; --k) {
    result = result * g;
    result[0] += coeffs_[k];
  }
  return result;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw std::invalid_argument("reciprocal: zero constant term");
  const int n = order();
  TruncatedSeries g(n);
  g[0] = 1 / coeffs_[0];
  for (int k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (int i = 1; i <= k; ++i) acc += coeffs_[i] * g[k - i];
    g[k] = -acc * g[0];
  }
  return g;
}

TruncatedSeries TruncatedSeries::log() const {
  if (coeffs_[0] != 1) throw std::invalid_argument("log: constant term must be 1");
  if (order() == 0) return TruncatedSeries(0);
  return (derivative() * reciprocal()).integral();
}

TruncatedSeries TruncatedSeries::exp() const {
  if (coeffs_[0] != 0) throw std::invalid_argument("exp: constant term must be 0");
  const int n = order();
  TruncatedSeries e(n);
  e[0] = 1;
  // e' = f' e
  for (int k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (int i = 1; i <= k; ++i) acc += coeffs_[i] * i * e[k - i];
    e[k] = acc / k;
  }
  return e;
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
  TruncatedSeries result = constant(1, order());
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const mpq_class& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries c(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

TruncatedSeries sin_series(int order) {
  TruncatedSeries s(order);
  for (int k = 1; k <= order; k += 2) {
    s[k] = exact(((k / 2) % 2 == 0) ? 1 : -1, factorial(k));
  }
  return s;
}

TruncatedSeries cos_series(int order) {
  TruncatedSeries s(order);
  for (int k = 0; k <= order; k += 2) {
    s[k] = exact(((k / 2) % 2 == 0) ? 1 : -1, factorial(k));
  }
  return s;
}

TruncatedSeries sec_series(int order) { return cos_series(order).reciprocal(); }

TruncatedSeries tan_series(int order) { return sin_series(order) * sec_series(order); }

TruncatedSeries sec_plus_tan(int order) { return sec_series(order) + tan_series(order); }

TruncatedSeries neg_log_one_minus_sin(int order) {
  return -(TruncatedSeries::constant(1, order) - sin_series(order)).log();
}

BivariateSeries::BivariateSeries(int order, int y_degree) : y_degree_(y_degree) {
  require_series_order(order, "BivariateSeries");
  if (y_degree < 0) throw std::invalid_argument("BivariateSeries: negative y degree");
  coeffs_.assign(order + 1, std::vector<mpq_class>(y_degree + 1, 0));
}

mpq_class BivariateSeries::at(int k, int j) const {
  if (j < 0 || j > y_degree_) return 0;
  return coeffs_.at(k)[j];
}

void BivariateSeries::set(int k, int j, const mpq_class& c) { coeffs_.at(k).at(j) = c; }

TruncatedSeries BivariateSeries::specialize_y(const mpq_class& y) const {
  TruncatedSeries s(order());
  for (int k = 0; k <= order(); ++k) {
    mpq_class acc = 0;
    for (int j = y_degree_; j >= 0; --j) acc = acc * y + coeffs_[k][j];
    s[k] = acc;
  }
  return s;
}

TruncatedSeries BivariateSeries::y_derivative_at(const mpq_class& y) const {
  TruncatedSeries s(order());
  for (int k = 0; k <= order(); ++k) {
    mpq_class acc = 0;
    for (int j = y_degree_; j >= 1; --j) acc = acc * y + coeffs_[k][j] * j;
    s[k] = acc;
  }
  return s;
}

TruncatedSeries BivariateSeries::y_coefficient(int j) const {
  TruncatedSeries s(order());
  for (int k = 0; k <= order(); ++k) s[k] = at(k, j);
  return s;
}

std::vector<mpz_class> euler_numbers(int count) {
  require_series_order(count, "euler_numbers");
  std::vector<mpz_class> out;
  if (count == 0) return out;
  const TruncatedSeries a = sec_plus_tan(count - 1);
  for (int n = 1; n <= count; ++n) {
    auto e = a.egf_integer(n - 1);
    if (!e) throw InvariantViolation("euler_numbers: non-integral coefficient");
    out.push_back(*e);
  }
  return out;
}

BivariateSeries ftilde(int order, int y_max) {
  require_series_order(order, "ftilde");
  const int y_degree = std::min(order, y_max);
  const TruncatedSeries L = neg_log_one_minus_sin(order);
  BivariateSeries f(order, y_degree);
  f.set(0, 0, 1);
  // F_k = (1/k) sum_i i L_i y F_{k-i}
  for (int k = 1; k <= order; ++k) {
    for (int j = 1; j <= y_degree; ++j) {
      mpq_class acc = 0;
      for (int i = 1; i <= k; ++i) {
        if (L[i] != 0) acc += L[i] * i * f.at(k - i, j - 1);
      }
      f.set(k, j, acc / k);
    }
  }
  return f;
}

CountTable table_lr_from_series(int n_max) {
  if (n_max < 1) throw std::invalid_argument("table_lr_from_series: n_max >= 1");
  require_series_order(n_max, "table_lr_from_series");
  const BivariateSeries f = ftilde(n_max - 1);
  CountTable table(Statistic::lr, Engine::series, n_max);
  for (int n = 1; n <= n_max; ++n) {
    const mpz_class scale = factorial(n - 1);
    for (int m = 1; m <= n_max; ++m) {
      mpq_class v = f.at(n - 1, m - 1) * scale;
      v.canonicalize();
      if (v.get_den() != 1 || v < 0) {
        throw InvariantViolation("table_lr_from_series: coefficient at n=" +
                                 std::to_string(n) + " m=" + std::to_string(m) +
                                 " is not a nonnegative integer");
      }
      table.set(n, m, v.get_num());
    }
  }
  return table;
}

bool euler_power_identity(int m, int order) {
  if (m < 1) throw std::invalid_argument("euler_power_identity: m >= 1");
  require_series_order(order + 1, "euler_power_identity");

  const auto e = euler_numbers(order);
  TruncatedSeries euler_egf(order);
  for (int n = 1; n <= order; ++n) euler_egf[n] = exact(e[n - 1], factorial(n));
  const mpq_class inv_mfact = exact(1, factorial(m));
  const TruncatedSeries lhs = euler_egf.pow(static_cast<unsigned>(m)) * inv_mfact;

  const CountTable res = table_lr_from_series(order + 1);
  TruncatedSeries rhs(order);
  for (int n = 0; n <= order; ++n) {
    if (n >= m) rhs[n] = exact(res.at(n + 1, m + 1), factorial(n));
  }
  if (!(lhs == rhs)) return false;

  const TruncatedSeries L = neg_log_one_minus_sin(order);
  const TruncatedSeries extracted = ftilde(order).y_coefficient(m);
  return extracted == L.pow(static_cast<unsigned>(m)) * inv_mfact;
}

TruncatedSeries cycle_egf(int order) {
  const TruncatedSeries one = TruncatedSeries::constant(1, order);
  return neg_log_one_minus_sin(order) * (one - sin_series(order)).reciprocal();
}

TruncatedSeries f2_series(int order) {
  require_series_order(order, "f2_series");
  const TruncatedSeries t1 = sec_plus_tan(order) - TruncatedSeries::constant(1, order);
  const TruncatedSeries appended = sec_plus_tan(order).integral();
  std::vector<mpz_class> a(order + 1), b(order + 1);
  for (int k = 1; k <= order; ++k) {
    a[k] = *t1.egf_integer(k);
    b[k] = *appended.egf_integer(k);
  }
  TruncatedSeries f2(order);
  for (int s = 3; s <= order; ++s) {
    for (int n = 1; n + 1 < s; ++n) {
      const int m = s - n - 1;
      const mpz_class den = mpz_class(n + m) * (n + m + 1) * factorial(m) * factorial(n - 1);
      f2[s] += exact(a[n] * b[m], den);
    }
  }
  return f2;
}

bool f2_identity_check(int order) {
  if (order < 3) throw std::invalid_argument("f2_identity_check: order >= 3");
  require_series_order(order, "f2_identity_check");
  const int n = order;
  const TruncatedSeries one = TruncatedSeries::constant(1, n);
  const TruncatedSeries sin = sin_series(n);
  const TruncatedSeries cos = cos_series(n);
  const TruncatedSeries sin_half = sin.scaled_argument(mpq_class(1, 2));
  const TruncatedSeries cos_half = cos.scaled_argument(mpq_class(1, 2));
  const TruncatedSeries sec = sec_series(n);

  const TruncatedSeries f2pp = f2_series(n).derivative().derivative();
  const TruncatedSeries appended = sec_plus_tan(n).integral().truncated(n);
  const TruncatedSeries t1_prime = (sec_plus_tan(n) - one).derivative();
  const TruncatedSeries product = appended * t1_prime;
  if (!(f2pp == product)) return false;

  // The integral of sec+tan in its logarithmic closed form.
  const TruncatedSeries log_form =
      -cos.log() - (cos_half - sin_half).log() + (cos_half + sin_half).log();
  if (!(appended == log_form)) return false;
  if (!(t1_prime == sec * sec_plus_tan(n))) return false;

  const TruncatedSeries merged_log =
      ((cos_half + sin_half) * (cos * (cos_half - sin_half)).reciprocal()).log();
  if (!(merged_log == log_form)) return false;
  const TruncatedSeries cos_sq_inv = (cos * cos).reciprocal();
  if (!(t1_prime == (one + sin) * cos_sq_inv)) return false;

  const TruncatedSeries double_angle_log =
      ((one + TruncatedSeries::constant(2, n) * sin_half * cos_half) *
       (cos * (TruncatedSeries::constant(2, n) * cos_half * cos_half - one)).reciprocal())
          .log();
  if (!(double_angle_log == merged_log)) return false;
  const TruncatedSeries inv_one_minus_sin = (one - sin).reciprocal();
  if (!(t1_prime == inv_one_minus_sin)) return false;

  const TruncatedSeries simplified_log = ((one + sin) * cos_sq_inv).log();
  if (!(simplified_log == double_angle_log)) return false;
  const TruncatedSeries final_log = inv_one_minus_sin.log();
  if (!(final_log == simplified_log)) return false;

  return product == final_log * inv_one_minus_sin && product == cycle_egf(n);
}

TrivariateTruncation TrivariateTruncation::from_trees(int order, int bound) {
  TrivariateTruncation f(order);
  std::vector<mpq_class> inv_fact(order + 1);
  for (int k = 0; k <= order; ++k) inv_fact[k] = exact(1, factorial(k));
  for_each_tree_up_to(
      order,
      [&](const IncreasingTree& t) {
        const TreeStatistics s = stats(t);
        f.add(s.o, s.l, s.n, inv_fact[s.n]);
      },
      bound);
  return f;
}

mpq_class TrivariateTruncation::coeff(int o, int l, int n) const {
  auto it = coeffs_.find({o, l, n});
  return it == coeffs_.end() ? mpq_class(0) : it->second;
}

PdeResidual pde_residual(const TrivariateTruncation& f) {
  PdeResidual out;
  out.max_abs = 0;
  out.boundary_ok = true;
  for (const auto& [key, c] : f.coeffs()) {
    if (std::get<2>(key) == 0 && c != 0) out.boundary_ok = false;
  }
  const int n = f.order();
  auto c = [&](int o, int l, int k) { return f.coeff(o, l, k); };
  for (int k = 0; k + 1 <= n; ++k) {
    for (int o = 0; o <= n + 1; ++o) {
      for (int l = 0; l <= n + 1; ++l) {
        mpq_class r = c(o, l, k) - c(o - 1, l, k) - c(o, l - 1, k);  // (1-x-y) F
        if (o == 1 && l == 1 && k == 0) r -= 1;                         // - xy
        r -= o * c(o, l, k);                                            // - x F_x
        r += 2 * (o - 1) * c(o - 1, l, k);                              // + 2x^2 F_x
        r += (k + 1) * c(o, l, k + 1);                                  // + F_z
        r -= k * c(o - 1, l, k);                                        // - xz F_z
        out.max_abs = std::max(out.max_abs, mpq_class(abs(r)));
        ++out.monomials_checked;
      }
    }
  }
  return out;
}

namespace {

void dump_coefficient(std::ostringstream& out, int k, const std::string& tag,
                      const mpq_class& c) {
  out << k << tag << ' ' << c.get_num().get_str() << '/' << c.get_den().get_str() << '\n';
  mpq_class scaled = c * factorial(k);
  scaled.canonicalize();
  if (scaled.get_den() == 1) {
    const std::string bracket = tag.empty() ? "" : " [" + tag.substr(1) + "]";
    out << k << "!" << " *" << bracket << " coeff = " << scaled.get_num().get_str()
        << '\n';
  }
}

}  // namespace

std::string dump_series(const TruncatedSeries& s) {
  std::ostringstream out;
  for (int k = 0; k <= s.order(); ++k) dump_coefficient(out, k, "", s[k]);
  return out.str();
}

std::string dump_series(const BivariateSeries& s) {
  std::ostringstream out;
  for (int k = 0; k <= s.order(); ++k) {
    for (int j = 0; j <= std::min(k, s.y_degree()); ++j) {
      dump_coefficient(out, k, " y^" + std::to_string(j), s.at(k, j));
    }
  }
  return out.str();
}

}  // namespace andre
