#include "andre/stat_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace andre {

mpz_class StatPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void StatPolynomial::add(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

StatPolynomial& StatPolynomial::operator+=(const StatPolynomial& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) step_ = rhs.step_;
  if (rhs.step_ != step_) throw std::invalid_argument("StatPolynomial: step mismatch");
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

StatPolynomial& StatPolynomial::operator-=(const StatPolynomial& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) step_ = rhs.step_;
  if (rhs.step_ != step_) throw std::invalid_argument("StatPolynomial: step mismatch");
  for (const auto& [m, c] : rhs.terms_) add(m, -c);
  return *this;
}

StatPolynomial StatPolynomial::times(const mpz_class& c, Monomial shift, int dz) const {
  StatPolynomial out(step_ + dz);
  for (const auto& [m, coeff] : terms_) {
    out.add({m.x + shift.x, m.w + shift.w, m.v + shift.v}, coeff * c);
  }
  return out;
}

StatPolynomial StatPolynomial::d_dx() const {
  StatPolynomial out(step_);
  for (const auto& [m, c] : terms_) {
    if (m.x > 0) out.add({m.x - 1, m.w, m.v}, c * m.x);
  }
  return out;
}

StatPolynomial StatPolynomial::d_dv() const {
  StatPolynomial out(step_);
  for (const auto& [m, c] : terms_) {
    if (m.v > 0) out.add({m.x, m.w, m.v - 1}, c * m.v);
  }
  return out;
}

StatPolynomial StatPolynomial::at_v_zero() const {
  StatPolynomial out(step_);
  for (const auto& [m, c] : terms_) {
    if (m.v == 0) out.add(m, c);
  }
  return out;
}

StatPolynomial StatPolynomial::divide_by_v() const {
  StatPolynomial out(step_);
  for (const auto& [m, c] : terms_) {
    if (m.v == 0) throw InvariantViolation("StatPolynomial: inexact division by v");
    out.add({m.x, m.w, m.v - 1}, c);
  }
  return out;
}

bool StatPolynomial::has_negative_coefficient() const {
  for (const auto& [m, c] : terms_) {
    if (c < 0) return true;
  }
  return false;
}

std::string StatPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    if (m.x) out << "*x^" << m.x;
    if (m.w) out << "*w^" << m.w;
    if (m.v) out << "*v^" << m.v;
  }
  out << " *z^" << step_;
  return out.str();
}

GPair g_start() {
  GPair g{StatPolynomial(1), StatPolynomial(1)};
  g.b.add({1, 1, 0}, 1);
  return g;
}

GPair g_step(const GPair& g) {
  const StatPolynomial& ga = g.a;
  const StatPolynomial& gb = g.b;
  const int next = std::max(ga.step(), gb.step()) + 1;
  if (!ga.is_zero() && !gb.is_zero() && ga.step() != gb.step()) {
    throw std::invalid_argument("g_step: G_A and G_B at different steps");
  }

  StatPolynomial a_no_v0 = ga;
  a_no_v0 -= ga.at_v_zero();
  const StatPolynomial a_over_v = a_no_v0.divide_by_v();

  GPair out{StatPolynomial(next), StatPolynomial(next)};
  out.a -= a_over_v.times(1, {1, 0, 0}, 1);
  out.a += ga.d_dv().times(1, {1, 0, 0}, 1);
  out.a += ga.d_dx().times(1, {1, 0, 1}, 1);
  out.a += gb.times(1, {0, 0, 1}, 1);

  out.b += a_over_v.times(1, {1, 1, 0}, 1);
  out.b += gb.d_dv().times(1, {1, 0, 0}, 1);
  out.b += gb.d_dx().times(1, {1, 0, 1}, 1);
  out.b -= gb.times(1, {0, 0, 1}, 1);

  if (out.a.has_negative_coefficient() || out.b.has_negative_coefficient()) {
    throw InvariantViolation("g_step: negative coefficient at step " +
                             std::to_string(next));
  }
  return out;
}

CountTable g_table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("g_table: n_max >= 1");
  require_series_order(n_max, "g_table");
  CountTable table(Statistic::rl, Engine::recursion, n_max);
  GPair g = g_start();
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) g = g_step(g);
    for (const auto* poly : {&g.a, &g.b}) {
      for (const auto& [m, c] : poly->terms()) table.add(n, m.w, c);
    }
  }
  table.fill_zeros_full_rows();
  return table;
}

GPair brute_stat_polynomials(int n, int bound) {
  GPair g{StatPolynomial(n), StatPolynomial(n)};
  for_each_tree(
      n,
      [&](const IncreasingTree& t) {
        const TreeStatistics s = stats(t);
        (s.cls == TreeClass::A ? g.a : g.b).add({s.o, s.r, s.d}, 1);
      },
      bound);
  return g;
}

}  // namespace andre
