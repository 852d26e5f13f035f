// Command-line front end: tree listings, count tables, series dumps and the
// verification suite. Exit status: 0 ok, 1 discrepancy/failed property,
// 2 usage error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "andre/engines.hpp"
#include "andre/permutation.hpp"
#include "andre/series.hpp"
#include "andre/tree.hpp"
#include "andre/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitUsage = 2;

std::string parents_string(const andre::IncreasingTree& t) {
  std::string out;
  const auto p = t.parents();
  for (std::size_t k = 2; k < p.size(); ++k) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p[k]);
  }
  return out.empty() ? "-" : out;
}

int cmd_trees(int n, const std::string& format) {
  using namespace andre;
  const auto trees = enumerate_trees(n);
  if (format == "json") {
    nlohmann::ordered_json doc;
    auto list = nlohmann::ordered_json::array();
    for (const auto& t : trees) {
      const TreeStatistics s = stats(t);
      list.push_back({{"parents", parents_string(t)},
                      {"o", s.o}, {"p", s.p}, {"q", s.q}, {"d", s.d},
                      {"l", s.l}, {"r", s.r}, {"cls", std::string(1, to_char(s.cls))},
                      {"phi_standard", phi(canonical_drawing(t, Orientation::standard)).to_string()},
                      {"phi_left", phi(canonical_drawing(t, Orientation::left_oriented)).to_string()}});
    }
    doc["n"] = n;
    doc["trees"] = std::move(list);
    doc["count"] = trees.size();
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }
  const bool csv = format == "csv";
  std::cout << (csv ? "index,parents,o,p,q,d,l,r,cls,phi_standard,phi_left\n"
                    : "# parents(2..n)  o p q d l r cls | phi standard | phi left\n");
  int index = 0;
  for (const auto& t : trees) {
    const TreeStatistics s = stats(t);
    const std::string std_phi = phi(canonical_drawing(t, Orientation::standard)).to_string();
    const std::string left_phi =
        phi(canonical_drawing(t, Orientation::left_oriented)).to_string();
    if (csv) {
      std::cout << index << ',' << parents_string(t) << ',' << s.o << ',' << s.p << ','
                << s.q << ',' << s.d << ',' << s.l << ',' << s.r << ',' << to_char(s.cls)
                << ',' << std_phi << ',' << left_phi << '\n';
    } else {
      std::cout << index << ": [" << parents_string(t) << "]  " << s.o << ' ' << s.p << ' '
                << s.q << ' ' << s.d << ' ' << s.l << ' ' << s.r << ' ' << to_char(s.cls)
                << " | (" << std_phi << ") | (" << left_phi << ")\n";
    }
    ++index;
  }
  std::cout << (csv ? "count," : "count: ") << trees.size() << '\n';
  return kExitOk;
}

std::vector<andre::Engine> parse_engines(const std::string& list, andre::Statistic stat) {
  using namespace andre;
  std::vector<Engine> engines;
  if (list == "all") {
    for (Engine e : {Engine::brute, Engine::eco, Engine::series, Engine::recursion}) {
      if (engine_supports(stat, e)) engines.push_back(e);
    }
    return engines;
  }
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto e = parse_engine(item);
    if (!e) throw std::invalid_argument("unknown engine: " + item);
    if (!engine_supports(stat, *e)) {
      throw std::invalid_argument(std::string("engine ") + item +
                                  " does not support statistic " + to_string(stat));
    }
    engines.push_back(*e);
  }
  if (engines.empty()) throw std::invalid_argument("no engine selected");
  return engines;
}

int cmd_table(const std::string& stat_name, int n_max, const std::string& engine_list_arg,
              const std::string& format) {
  using namespace andre;
  const Statistic stat = *parse_statistic(stat_name);
  const auto engines = parse_engines(engine_list_arg, stat);
  require_tree_size(n_max, tree_size_bound(), "table");

  std::vector<CountTable> tables;
  for (Engine e : engines) tables.push_back(engine_table(stat, e, n_max));

  std::optional<Discrepancy> mismatch;
  for (std::size_t i = 1; i < tables.size() && !mismatch; ++i) {
    mismatch = first_discrepancy(tables.front(), tables[i]);
  }

  std::string engine_list;
  for (Engine e : engines) engine_list += std::string(engine_list.empty() ? "" : ",") + to_string(e);
  const std::string verdict = mismatch ? "DISCREPANCY " + mismatch->describe()
                                       : "AGREE " + engine_list;

  if (format == "csv") {
    bool first = true;
    for (const auto& t : tables) {
      std::string body = t.to_csv();
      if (!first) body = body.substr(body.find('\n') + 1);
      std::cout << body;
      first = false;
    }
    std::cerr << verdict << '\n';
  } else if (format == "json") {
    nlohmann::ordered_json doc;
    doc["statistic"] = to_string(stat);
    doc["n_max"] = n_max;
    auto list = nlohmann::ordered_json::array();
    for (const auto& t : tables) list.push_back(nlohmann::ordered_json::parse(t.to_json()));
    doc["tables"] = std::move(list);
    doc["agreement"] = !mismatch.has_value();
    if (mismatch) doc["discrepancy"] = mismatch->describe();
    std::cout << doc.dump(2) << '\n';
  } else {
    // Cells an engine left undefined (for example the rl series engine past
    // column 2) are filled from the next engine that defines them.
    CountTable merged = tables.front();
    for (const auto& t : tables) {
      for (const auto& [key, value] : t.cells()) {
        if (!merged.defined(key.first, key.second)) merged.set(key.first, key.second, value);
      }
    }
    std::cout << merged.to_pretty() << verdict << '\n';
  }
  return mismatch ? kExitDiscrepancy : kExitOk;
}

int cmd_verify(int n_max, int inject_fault_level) {
  using namespace andre;
  require_tree_size(n_max, tree_size_bound(), "verify");
  VerifyOptions options;
  options.n_max = n_max;
  options.perturbation.at_level = inject_fault_level;
  const auto results = run_property_suite(options);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << '\t' << r.name;
    if (!r.passed) std::cout << '\t' << r.detail;
    std::cout << '\n';
    failed += r.passed ? 0 : 1;
  }
  std::cout << "summary\t" << results.size() - failed << '/' << results.size()
            << " passed\n";
  return failed == 0 ? kExitOk : kExitDiscrepancy;
}

int cmd_series(const std::string& name, int order, const std::string& format) {
  using namespace andre;
  require_series_order(order, "series");
  if (name == "ftilde") {
    const BivariateSeries f = ftilde(order);
    if (format == "json") {
      nlohmann::ordered_json doc{{"name", name}, {"order", order}};
      auto list = nlohmann::ordered_json::array();
      for (int k = 0; k <= order; ++k) {
        for (int j = 0; j <= k; ++j) {
          const mpq_class c = f.at(k, j);
          list.push_back({{"k", k}, {"y", j}, {"value", c.get_num().get_str() + "/" +
                                                          c.get_den().get_str()}});
        }
      }
      doc["coefficients"] = std::move(list);
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << dump_series(f);
    }
    return kExitOk;
  }
  // "euler" is the EGF sum e_n z^n / n!, i.e. the integral of sec + tan.
  const TruncatedSeries s = name == "euler" ? neg_log_one_minus_sin(order)
                            : name == "cycle" ? cycle_egf(order)
                                              : f2_series(order);
  if (format == "json") {
    nlohmann::ordered_json doc{{"name", name}, {"order", order}};
    auto list = nlohmann::ordered_json::array();
    for (int k = 0; k <= order; ++k) {
      nlohmann::ordered_json item{
          {"k", k}, {"value", s[k].get_num().get_str() + "/" + s[k].get_den().get_str()}};
      if (auto v = s.egf_integer(k)) item["egf"] = v->get_str();
      list.push_back(std::move(item));
    }
    doc["coefficients"] = std::move(list);
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << dump_series(s);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary increasing trees, restricted Andre permutations and their counts"};
  app.require_subcommand(1);

  int trees_n = 4;
  std::string trees_format = "pretty";
  auto* trees = app.add_subcommand("trees", "List B_n with statistics and both phi images");
  trees->add_option("--n", trees_n, "Tree size")->required()->check(CLI::PositiveNumber);
  trees->add_option("--format", trees_format)->check(CLI::IsMember({"pretty", "csv", "json"}));

  std::string table_stat = "lr";
  int table_n_max = 10;
  std::string table_engines = "all";
  std::string table_format = "pretty";
  auto* table = app.add_subcommand("table", "Count table by left-to-right or right-to-left minima");
  table->add_option("--stat", table_stat)->check(CLI::IsMember({"lr", "rl"}));
  table->add_option("--n-max", table_n_max)->check(CLI::PositiveNumber);
  table->add_option("--engine", table_engines,
                    "brute, eco, series, recursion (comma separated) or all");
  table->add_option("--format", table_format)->check(CLI::IsMember({"pretty", "csv", "json"}));

  int verify_n_max = 10;
  int inject_fault = 0;
  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--n-max", verify_n_max)->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault", inject_fault,
                     "Test mode: perturb the lr rule at this level")
      ->group("");

  std::string series_name = "euler";
  int series_order = andre::kDefaultSeriesOrder;
  std::string series_format = "text";
  auto* series = app.add_subcommand("series", "Dump exact series coefficients");
  series->add_option("--name", series_name)
      ->required()
      ->check(CLI::IsMember({"euler", "ftilde", "cycle", "f2"}));
  series->add_option("--order", series_order)->check(CLI::NonNegativeNumber);
  series->add_option("--format", series_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*trees) return cmd_trees(trees_n, trees_format);
    if (*table) return cmd_table(table_stat, table_n_max, table_engines, table_format);
    if (*verify) return cmd_verify(verify_n_max, inject_fault);
    if (*series) return cmd_series(series_name, series_order, series_format);
  } catch (const andre::InvariantViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDiscrepancy;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
