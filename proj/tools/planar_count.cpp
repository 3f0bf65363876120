// planar_count: count regular bipartite multigraphs with bounded planar
// matchings or subgraphs, cross-check the counting methods, and expand the
// related generating functions.
//
// Exit codes: 0 success, 1 verification failure, 2 usage, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "planar/json_io.hpp"
#include "planar/multigraph.hpp"
#include "planar/oracle.hpp"
#include "planar/series.hpp"
#include "planar/tableaux.hpp"
#include "planar/walks.hpp"

namespace {

using namespace planar;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kMaxSeriesBound = 32;

struct Config {
  int n = -1;
  int r = -1;
  int d = -1;
  std::string method = "walks";
  std::string variant = "matching";
  std::string format = "json";
  std::string series_kind;
  int x_bound = 8;
  int max_rn = 6;
  int max_d = 4;
  std::optional<std::uint64_t> budget;
  std::string out;
  bool corrupt_fixture = false;
};

std::uint64_t budget_of(const Config& c) { return c.budget.value_or(default_budget()); }

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot open output file " + c.out);
  f << text;
}

int cmd_count(const Config& c) {
  if (c.n < 0 || c.r < 0 || c.d < 0) throw InvalidInput("--n, --r and --d must be non-negative");
  const bool subgraph = c.variant == "subgraph";
  const std::uint64_t budget = budget_of(c);
  BigInt count;
  if (c.method == "brute") {
    count = subgraph ? oracle::brute_g_hat(c.n, c.r, c.d, budget) : oracle::brute_g(c.n, c.r, c.d, budget);
  } else if (c.method == "walks") {
    count = signed_toeplitz_sum(c.d, c.n, c.r, subgraph ? BlockVariant::increasing : BlockVariant::nonincreasing);
  } else if (c.method == "tableaux") {
    count = count_tableau_pairs(c.n, c.r, c.d,
                                subgraph ? RowCondition::weak_ascent : RowCondition::strict_descent, budget);
  } else {
    if (subgraph) throw InvalidInput("--method chamber only counts planar matchings");
    count = count_chamber_walks(c.d, c.n, c.r, budget);
  }
  const std::string value = to_string(count);
  if (c.format == "json") {
    const nlohmann::ordered_json rec = {{"n", c.n},           {"r", c.r},           {"d", c.d},
                                        {"method", c.method}, {"variant", c.variant}, {"count", value}};
    emit(c, rec.dump() + "\n");
  } else if (c.format == "csv") {
    emit(c, "n,r,d,method,variant,count\n" + std::to_string(c.n) + ',' + std::to_string(c.r) + ',' +
                std::to_string(c.d) + ',' + c.method + ',' + c.variant + ',' + value + '\n');
  } else {
    emit(c, value + "\n");
  }
  return 0;
}

int cmd_verify(const Config& c) {
  oracle::VerifyOptions options;
  options.max_rn = c.max_rn;
  options.max_d = c.max_d;
  options.x_bound = c.x_bound;
  options.corrupt_fixture = c.corrupt_fixture;
  options.budget = budget_of(c);
  const auto report = oracle::verify_all(options);
  std::string text;
  if (c.format == "json") {
    text = report.to_json();
  } else if (c.format == "csv") {
    text = report.to_csv();
  } else {
    text = report.to_text();
  }
  emit(c, text);
  if (!c.out.empty()) {
    std::cout << report.rows().size() << " rows, " << report.failures() << " failing\n";
  }
  return report.passed() ? 0 : kExitVerifyFailed;
}

int cmd_series(const Config& c) {
  if (c.x_bound < 0) throw InvalidInput("--xmax must be non-negative");
  if (c.x_bound > kMaxSeriesBound) throw BudgetExceeded("--xmax above " + std::to_string(kMaxSeriesBound));
  TruncatedSeries s;
  if (c.series_kind == "gessel") {
    if (c.d < 1) throw InvalidInput("series gessel needs --d >= 1");
    s = gessel_determinant(c.d, c.x_bound);
  } else if (c.series_kind == "gessel-alt") {
    s = gessel_determinant_alt(c.x_bound);
  } else {
    s = two_regular_generating_function(c.x_bound);
  }
  if (c.format == "json") {
    emit(c, json_io::to_json(s).dump() + "\n");
    return 0;
  }
  const auto coeffs = x_coefficients(s);
  std::string text = c.format == "csv" ? "power,num,den\n" : "";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const std::string num = to_string(BigInt(numerator(coeffs[k])));
    const std::string den = to_string(BigInt(denominator(coeffs[k])));
    if (c.format == "csv") {
      text += std::to_string(k) + ',' + num + ',' + den + '\n';
    } else {
      text += "x^" + std::to_string(k) + "  " + to_string(coeffs[k]) + '\n';
    }
  }
  emit(c, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts of regular bipartite multigraphs by planar matching and subgraph size"};
  app.require_subcommand(1);
  Config c;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "Enumeration cap (default: PLANAR_COUNT_BUDGET or 1e8)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", c.out, "Write output to this file");
  };

  auto* count = app.add_subcommand("count", "Count r-regular multigraphs with bounded planar size");
  count->add_option("--n", c.n, "Vertices per side")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--r", c.r, "Degree")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--d", c.d, "Bound on the planar size")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--method", c.method, "brute, walks, tableaux or chamber")
      ->check(CLI::IsMember({"brute", "walks", "tableaux", "chamber"}));
  count->add_option("--variant", c.variant, "matching or subgraph")->check(CLI::IsMember({"matching", "subgraph"}));
  count->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember(formats));
  add_budget(count);

  auto* verify = app.add_subcommand("verify", "Cross-check every method against brute force");
  verify->add_option("--max-rn", c.max_rn, "Largest rn enumerated")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-d", c.max_d, "Largest d enumerated")->check(CLI::NonNegativeNumber);
  verify->add_option("--xmax", c.x_bound, "Series truncation degree")->check(CLI::NonNegativeNumber);
  verify->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember(formats));
  verify->add_flag("--corrupt-fixture", c.corrupt_fixture,
                   "Perturb the first report row, to check that failures are detected");
  add_budget(verify);

  auto* series = app.add_subcommand("series", "Expand a generating function");
  series->add_option("kind", c.series_kind, "gessel, gessel-alt or theorem8")
      ->required()
      ->check(CLI::IsMember({"gessel", "gessel-alt", "theorem8"}));
  series->add_option("--d", c.d, "Determinant size for gessel");
  series->add_option("--xmax", c.x_bound, "Truncation degree in x")->check(CLI::NonNegativeNumber);
  series->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember(formats));
  add_budget(series);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(c);
    if (verify->parsed()) return cmd_verify(c);
    return cmd_series(c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
}
