#include "andre/count_table.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace andre {

const char* to_string(Statistic s) { return s == Statistic::lr ? "lr" : "rl"; }

const char* to_string(Engine e) {
  switch (e) {
    case Engine::brute: return "brute";
    case Engine::eco: return "eco";
    case Engine::series: return "series";
    case Engine::recursion: return "recursion";
  }
  return "?";
}

std::optional<Statistic> parse_statistic(std::string_view text) {
  if (text == "lr") return Statistic::lr;
  if (text == "rl") return Statistic::rl;
  return std::nullopt;
}

std::optional<Engine> parse_engine(std::string_view text) {
  for (Engine e : {Engine::brute, Engine::eco, Engine::series, Engine::recursion}) {
    if (text == to_string(e)) return e;
  }
  return std::nullopt;
}

mpz_class CountTable::at(int n, int s) const {
  auto it = cells_.find({n, s});
  return it == cells_.end() ? mpz_class(0) : it->second;
}

mpz_class CountTable::row_sum(int n) const {
  mpz_class sum = 0;
  for (auto it = cells_.lower_bound({n, 0}); it != cells_.end() && it->first.first == n;
       ++it) {
    sum += it->second;
  }
  return sum;
}

void CountTable::fill_zeros_full_rows() {
  for (int n = 1; n <= n_max_; ++n) {
    for (int s = 1; s <= n_max_; ++s) cells_.try_emplace({n, s}, 0);
  }
}

int CountTable::first_shown() const {
  return statistic_ == Statistic::lr && n_max_ >= 2 ? 2 : 1;
}

std::string CountTable::to_csv() const {
  std::ostringstream out;
  out << "n,stat,count,engine\n";
  for (const auto& [key, count] : cells_) {
    out << key.first << ',' << key.second << ',' << count.get_str() << ','
        << to_string(engine_) << '\n';
  }
  return out.str();
}

std::string CountTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["statistic"] = to_string(statistic_);
  doc["engine"] = to_string(engine_);
  doc["n_max"] = n_max_;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [key, count] : cells_) {
    entries.push_back({{"n", key.first}, {"stat", key.second}, {"count", count.get_str()}});
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string CountTable::to_pretty() const {
  const int lo = first_shown();
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{statistic_ == Statistic::lr ? "n/m" : "n/r"};
  for (int s = lo; s <= n_max_; ++s) header.push_back(std::to_string(s));
  grid.push_back(header);
  for (int n = lo; n <= n_max_; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (int s = lo; s <= n_max_; ++s) {
      row.push_back(defined(n, s) ? at(n, s).get_str() : ".");
    }
    grid.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  out << "# " << to_string(statistic_) << " table (" << to_string(engine_) << ")\n";
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string Discrepancy::describe() const {
  std::ostringstream out;
  out << to_string(statistic) << " n=" << n << " stat=" << s << ": " << left_engine
      << '=' << left_value.get_str() << " vs " << right_engine << '='
      << right_value.get_str();
  return out.str();
}

std::optional<Discrepancy> first_discrepancy(const CountTable& a, const CountTable& b) {
  for (const auto& [key, value] : a.cells()) {
    if (!b.defined(key.first, key.second)) continue;
    const mpz_class other = b.at(key.first, key.second);
    if (value != other) {
      return Discrepancy{key.first,         key.second,          a.statistic(),
                         to_string(a.engine()), to_string(b.engine()), value, other};
    }
  }
  return std::nullopt;
}

}  // namespace andre
