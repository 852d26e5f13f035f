#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace andre {

enum class Statistic { lr, rl };
enum class Engine { brute, eco, series, recursion };

const char* to_string(Statistic s);
const char* to_string(Engine e);
std::optional<Statistic> parse_statistic(std::string_view text);
std::optional<Engine> parse_engine(std::string_view text);

/// Triangle of counts indexed by (size n, statistic value s).
///
/// Only cells that the producing engine actually computed are stored; an
/// engine that covers part of the triangle leaves the rest undefined, which
/// comparisons skip. Stored zeros are meaningful.
class CountTable {
 public:
  CountTable(Statistic statistic, Engine engine, int n_max)
      : statistic_(statistic), engine_(engine), n_max_(n_max) {}

  Statistic statistic() const noexcept { return statistic_; }
  Engine engine() const noexcept { return engine_; }
  int n_max() const noexcept { return n_max_; }

  void set(int n, int s, mpz_class count) { cells_[{n, s}] = std::move(count); }
  void add(int n, int s, const mpz_class& count) { cells_[{n, s}] += count; }
  bool defined(int n, int s) const { return cells_.count({n, s}) != 0; }
  /// Value of a cell; undefined cells read as zero.
  mpz_class at(int n, int s) const;
  mpz_class row_sum(int n) const;

  const std::map<std::pair<int, int>, mpz_class>& cells() const noexcept {
    return cells_;
  }

  /// Defines every still-undefined cell (n, s), 1 <= n, s <= n_max, as zero.
  /// Engines that enumerate whole rows call this so that absent combinations
  /// compare as zero.
  void fill_zeros_full_rows();

  /// First row and column of the pretty layout: lr tables start at 2 (the
  /// n = 1 row is trivial) once n_max >= 2, rl tables at 1.
  int first_shown() const;

  std::string to_csv() const;
  std::string to_json() const;
  std::string to_pretty() const;

 private:
  Statistic statistic_;
  Engine engine_;
  int n_max_;
  std::map<std::pair<int, int>, mpz_class> cells_;
};

struct Discrepancy {
  int n = 0;
  int s = 0;
  Statistic statistic = Statistic::lr;
  std::string left_engine;
  std::string right_engine;
  mpz_class left_value;
  mpz_class right_value;

  std::string describe() const;
};

/// First cell, in (n, s) order, where both tables are defined and differ.
std::optional<Discrepancy> first_discrepancy(const CountTable& a, const CountTable& b);

}  // namespace andre
