#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "leib/bipoly.hpp"
#include "leib/combinatorics.hpp"
#include "leib/generalized.hpp"
#include "leib/identities.hpp"
#include "leib/rational.hpp"
#include "leib/report.hpp"
#include "leib/series.hpp"
#include "leib/special_numbers.hpp"
#include "leib/unipoly.hpp"
#include "leib/volkenborn.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned parse_natural(const std::string& text, const std::string& what) {
  unsigned value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw UsageError(what + ": expected a natural number, got '" + text + "'");
  return value;
}

leib::Rational parse_rational(const std::string& text, const std::string& what) {
  auto r = leib::Rational::parse(text);
  if (!r) throw UsageError(what + ": expected a rational 'p/q', got '" + text + "'");
  return *r;
}

// Comma-separated rationals; errors carry the token index and byte position.
std::vector<leib::Rational> parse_sample_list(const std::string& text,
                                              const std::string& flag) {
  std::vector<leib::Rational> out;
  std::size_t pos = 0, index = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    auto r = leib::Rational::parse(token);
    if (!r)
      throw UsageError(flag + ": token " + std::to_string(index) + " at position " +
                       std::to_string(pos) + " is not a rational 'p/q': '" + token + "'");
    out.push_back(*r);
    ++index;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct Table {
  std::string name;
  std::string corner;  // header of the row-label column
  std::vector<std::string> columns;
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::string>> cells;
};

std::string table_markdown(const Table& t) {
  std::string out = "| " + t.corner + " |";
  for (const auto& c : t.columns) out += " " + c + " |";
  out += "\n|";
  for (std::size_t i = 0; i <= t.columns.size(); ++i) out += " --- |";
  out += "\n";
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    out += "| " + t.row_labels[r] + " |";
    for (const auto& cell : t.cells[r]) out += " " + cell + " |";
    out += "\n";
  }
  return out;
}

std::string table_csv(const Table& t) {
  std::string out = t.corner;
  for (const auto& c : t.columns) out += "," + c;
  out += "\n";
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    out += t.row_labels[r];
    for (const auto& cell : t.cells[r]) out += "," + cell;
    out += "\n";
  }
  return out;
}

std::string table_json(const Table& t) {
  nlohmann::json j;
  j["table"] = t.name;
  j["columns"] = t.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < t.cells.size(); ++r)
    rows.push_back({{"label", t.row_labels[r]}, {"cells", t.cells[r]}});
  j["rows"] = std::move(rows);
  return j.dump(2);
}

void emit_table(const Table& t, const std::string& format) {
  if (format == "csv")
    std::cout << table_csv(t);
  else if (format == "json")
    std::cout << table_json(t) << "\n";
  else
    std::cout << table_markdown(t);
}

Table build_triangle_table(unsigned n_max) {
  Table t;
  t.name = "triangle";
  t.corner = "n\\k";
  leib::LeibnitzTriangle tri = leib::leibnitz_triangle(n_max);
  for (unsigned k = 0; k <= n_max; ++k) t.columns.push_back("k=" + std::to_string(k));
  for (unsigned n = 0; n <= n_max; ++n) {
    t.row_labels.push_back("n=" + std::to_string(n));
    std::vector<std::string> row(n_max + 1);
    for (unsigned k = 0; k <= n; ++k) row[k] = tri.at(n, k).str();
    t.cells.push_back(std::move(row));
  }
  return t;
}

Table build_classical_matrix(unsigned n_max, unsigned k_max) {
  Table t;
  t.name = "classical-matrix";
  t.corner = "n\\k";
  for (unsigned k = 0; k <= k_max; ++k) t.columns.push_back("k=" + std::to_string(k));
  for (unsigned n = 0; n <= n_max; ++n) {
    t.row_labels.push_back("n=" + std::to_string(n));
    std::vector<std::string> row(k_max + 1);
    for (unsigned k = 0; k <= k_max && k <= n; ++k) row[k] = leib::leibnitz(n, k).str();
    t.cells.push_back(std::move(row));
  }
  return t;
}

Table build_gen_fixed_k(unsigned k, unsigned n_max) {
  Table t;
  t.name = "gen-k" + std::to_string(k);
  t.corner = "n";
  t.columns.push_back("L(n," + std::to_string(k) + ";a,b)");
  for (unsigned n = 0; n <= n_max; ++n) {
    t.row_labels.push_back("n=" + std::to_string(n));
    std::vector<std::string> row(1);
    if (k <= n) row[0] = leib::gen_leibnitz_symbolic(n, k).str();
    t.cells.push_back(std::move(row));
  }
  return t;
}

Table build_gen_matrix(unsigned n_max, unsigned k_max) {
  Table t;
  t.name = "gen-matrix";
  t.corner = "n\\k";
  for (unsigned k = 0; k <= k_max; ++k) t.columns.push_back("k=" + std::to_string(k));
  for (unsigned n = 0; n <= n_max; ++n) {
    t.row_labels.push_back("n=" + std::to_string(n));
    std::vector<std::string> row(k_max + 1);
    for (unsigned k = 0; k <= k_max && k <= n; ++k)
      row[k] = leib::gen_leibnitz_symbolic(n, k).str();
    t.cells.push_back(std::move(row));
  }
  return t;
}

int cmd_num(const std::vector<std::string>& raw) {
  bool symbolic = false;
  std::vector<std::string> args;
  for (const std::string& tok : raw) {
    if (tok == "--symbolic")
      symbolic = true;
    else if (tok != "--")
      args.push_back(tok);
  }
  if (args.empty()) throw UsageError("num: missing family (leibnitz|daehee|changhee|y|gen)");
  const std::string& family = args[0];
  auto need = [&](std::size_t count) {
    if (args.size() - 1 != count)
      throw UsageError("num " + family + ": expected " + std::to_string(count) +
                       " argument(s), got " + std::to_string(args.size() - 1));
  };
  if (family == "leibnitz") {
    need(2);
    std::cout << leib::leibnitz(parse_natural(args[1], "n"), parse_natural(args[2], "k")).str()
              << "\n";
  } else if (family == "daehee") {
    need(1);
    std::cout << leib::daehee(parse_natural(args[1], "n")).str() << "\n";
  } else if (family == "changhee") {
    need(1);
    std::cout << leib::changhee(parse_natural(args[1], "n")).str() << "\n";
  } else if (family == "y") {
    need(2);
    std::cout << leib::y_number(parse_natural(args[1], "n"), parse_rational(args[2], "lambda"))
                     .str()
              << "\n";
  } else if (family == "gen") {
    if (symbolic) {
      need(2);
      std::cout << leib::gen_leibnitz_symbolic(parse_natural(args[1], "n"),
                                               parse_natural(args[2], "k"))
                       .str()
                << "\n";
    } else {
      need(4);
      std::cout << leib::gen_leibnitz(parse_natural(args[1], "n"), parse_natural(args[2], "k"),
                                      parse_rational(args[3], "a"), parse_rational(args[4], "b"))
                       .str()
                << "\n";
    }
  } else {
    throw UsageError("num: unknown family '" + family + "'");
  }
  return 0;
}

int cmd_table(const std::string& which, std::optional<unsigned> n_max,
              std::optional<unsigned> k_max, const std::string& format) {
  Table t;
  if (which == "triangle") {
    t = build_triangle_table(n_max.value_or(8));
  } else if (which == "classical-matrix") {
    unsigned n = n_max.value_or(8);
    t = build_classical_matrix(n, k_max.value_or(n));
  } else if (which == "gen-k1") {
    t = build_gen_fixed_k(1, n_max.value_or(4));
  } else if (which == "gen-k2") {
    t = build_gen_fixed_k(2, n_max.value_or(4));
  } else if (which == "gen-matrix") {
    t = build_gen_matrix(n_max.value_or(3), k_max.value_or(2));
  } else {
    throw UsageError("table: unknown table id '" + which + "'");
  }
  emit_table(t, format);
  return 0;
}

int cmd_series(const std::string& family, unsigned order,
               const std::optional<std::string>& lambda_text) {
  if (family == "leibnitz") {
    std::vector<leib::UniPoly> coeffs = leib::solve_leibnitz_coefficients(order);
    for (unsigned n = 0; n <= order; ++n)
      std::cout << "u^" << n << ": " << coeffs[n].str() << "\n";
    return 0;
  }
  std::optional<leib::NumberFamily> fam;
  if (family == "daehee") fam = leib::NumberFamily::daehee;
  if (family == "changhee") fam = leib::NumberFamily::changhee;
  if (family == "y") fam = leib::NumberFamily::y;
  if (!fam) throw UsageError("series: unknown family '" + family + "'");
  std::optional<leib::Rational> lambda;
  if (*fam == leib::NumberFamily::y) {
    if (!lambda_text) throw UsageError("series y: --lambda is required");
    lambda = parse_rational(*lambda_text, "--lambda");
  }
  for (unsigned n = 0; n <= order; ++n) {
    leib::Rational value = leib::number_family_value(*fam, n, lambda).value;
    value /= leib::Rational(leib::factorial(n));
    std::cout << "u^" << n << ": " << value.str() << "\n";
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& ids, const leib::RunConfig& cfg,
               const std::string& format) {
  leib::VerificationReport report =
      ids.empty() ? leib::run_all(cfg, leib::Exec::parallel)
                  : leib::run_identities(ids, cfg, leib::Exec::parallel);
  if (format == "csv")
    std::cout << leib::to_csv(report);
  else if (format == "json")
    std::cout << leib::to_json(report) << "\n";
  else
    std::cout << leib::to_markdown(report);
  return report.all_pass() ? 0 : kExitVerifyFailed;
}

int cmd_volkenborn_check(const std::string& which, unsigned depth) {
  for (unsigned n = 0; n <= depth; ++n) {
    leib::UniPoly lhs = which == "check-a11" ? leib::theorem_a11_polynomial(n)
                                             : leib::theorem_ki1_polynomial(n);
    leib::UniPoly rhs = leib::leibnitz_polynomial(n);
    if (lhs != rhs) {
      std::cout << "FAIL at n=" << n << ": " << lhs.str() << " vs " << rhs.str() << "\n";
      return kExitVerifyFailed;
    }
  }
  std::cout << "pass (n <= " << depth << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Leibnitz-number toolkit: compute, tabulate, and verify identities"};
  app.require_subcommand(1);

  std::string format = "md";
  app.add_option("--format", format, "Output format for tables and reports")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  unsigned depth = 20;
  app.add_option("--depth", depth, "Verification depth (max n)");
  std::string t_samples_text;
  app.add_option("--t-samples", t_samples_text, "Comma-separated rational t samples");
  std::string lambda_samples_text;
  app.add_option("--lambda-samples", lambda_samples_text,
                 "Comma-separated rational lambda samples");
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP thread count (0 = library default)");

  auto* num = app.add_subcommand(
      "num", "Print one number of a family (--symbolic: gen as an (a,b) polynomial)");
  num->prefix_command();  // raw tokens; negatives allowed after "--"

  auto* table = app.add_subcommand("table", "Emit a table of values");
  table->fallthrough();
  std::string table_which;
  table->add_option("which", table_which,
                    "triangle|classical-matrix|gen-k1|gen-k2|gen-matrix")
      ->required();
  std::optional<unsigned> table_n_max, table_k_max;
  table->add_option("n_max", table_n_max, "Largest row index");
  table->add_option("k_max", table_k_max, "Largest column index");

  auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
  verify->fallthrough();
  std::vector<std::string> verify_ids;
  verify->add_option("ids", verify_ids, "Identity ids (default: all)");

  auto* series = app.add_subcommand("series", "Dump generating-function coefficients");
  series->fallthrough();
  std::string series_family;
  series->add_option("family", series_family, "leibnitz|daehee|changhee|y")->required();
  unsigned series_order = 0;
  series->add_option("order", series_order, "Truncation order")->required();
  std::optional<std::string> series_lambda;
  series->add_option("--lambda", series_lambda, "Y family parameter (p/q, != 1)");

  auto* volk = app.add_subcommand("volkenborn", "Volkenborn-integral computations");
  volk->fallthrough();
  volk->require_subcommand(1);
  auto* volk_poly = volk->add_subcommand("poly", "Integrate a polynomial (ascending coefficients)");
  volk_poly->fallthrough();
  std::vector<std::string> volk_coeffs;
  volk_poly->add_option("coefficients", volk_coeffs, "c0 c1 c2 ...")->required();
  auto* volk_prod = volk->add_subcommand("product", "Integral of x_(n) x_(m)");
  volk_prod->fallthrough();
  unsigned volk_n = 0, volk_m = 0;
  volk_prod->add_option("n", volk_n)->required();
  volk_prod->add_option("m", volk_m)->required();
  auto* volk_a11 = volk->add_subcommand("check-a11", "Cross-check the V(k,n-k) expansion");
  volk_a11->fallthrough();
  auto* volk_ki1 = volk->add_subcommand("check-ki1", "Cross-check the explicit double sum");
  volk_ki1->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

#if defined(_OPENMP)
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif

  try {
    leib::RunConfig cfg;
    cfg.depth = depth;
    if (app.count("--t-samples") > 0)
      cfg.t_samples = parse_sample_list(t_samples_text, "--t-samples");
    if (app.count("--lambda-samples") > 0)
      cfg.lambda_samples = parse_sample_list(lambda_samples_text, "--lambda-samples");

    if (num->parsed()) return cmd_num(num->remaining());
    if (table->parsed()) return cmd_table(table_which, table_n_max, table_k_max, format);
    if (verify->parsed()) return cmd_verify(verify_ids, cfg, format);
    if (series->parsed()) return cmd_series(series_family, series_order, series_lambda);
    if (volk->parsed()) {
      if (volk_poly->parsed()) {
        std::vector<leib::Rational> coeffs;
        for (std::size_t i = 0; i < volk_coeffs.size(); ++i)
          coeffs.push_back(parse_rational(volk_coeffs[i], "c" + std::to_string(i)));
        std::cout << leib::volkenborn_integral_poly(leib::UniPoly(std::move(coeffs))).str()
                  << "\n";
        return 0;
      }
      if (volk_prod->parsed()) {
        std::cout << leib::volkenborn_falling_product(volk_n, volk_m).str() << "\n";
        return 0;
      }
      if (volk_a11->parsed()) return cmd_volkenborn_check("check-a11", depth);
      if (volk_ki1->parsed()) return cmd_volkenborn_check("check-ki1", depth);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
