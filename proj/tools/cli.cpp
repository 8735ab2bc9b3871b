#include "cli.hpp"

#include "qfaul/errors.hpp"
#include "qfaul/record.hpp"
#include "qfaul/shape.hpp"
#include "qfaul/suites.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

namespace qfaul::cli {

namespace {

struct Options {
  std::string family;
  int m = 0;
  int k = 0;
  int max_m = 0;
  std::optional<int> verify_max_m;
  std::string method = "det";
  std::string format = "pretty";
  std::string suite = "all";
};

Family family_or_throw(const std::string &name) {
  auto f = parse_family(name);
  if (!f)
    throw CLI::ValidationError("--family", "expected one of P, Q, G, H");
  return *f;
}

void emit(const std::vector<CoeffRecord> &records, const std::string &format,
          std::ostream &out) {
  if (format == "json") {
    if (records.size() == 1)
      out << to_json(records.front()) << '\n';
    else
      out << to_json(records) << '\n';
  } else if (format == "csv") {
    out << csv_header();
    for (const auto &r : records)
      out << to_csv_rows(r);
  } else {
    for (const auto &r : records)
      out << to_string(r.value) << '\n';
  }
}

int cmd_compute(const Options &o, std::ostream &out, std::ostream &err) {
  Family f = family_or_throw(o.family);
  Route route = *parse_route(o.method);
  LaurentPoly value = compute(f, o.m, o.k, route);
  if (route != Route::det && value != coefficient_det(f, o.m, o.k)) {
    err << "route " << o.method << " disagrees with the determinant route\n";
    return kVerifyFailed;
  }
  emit({CoeffRecord{f, o.m, o.k, route, value}}, o.format, out);
  return kOk;
}

int cmd_table(const Options &o, std::ostream &out) {
  Family f = family_or_throw(o.family);
  auto table = compute_table(f, o.max_m, Route::det, Execution::parallel);
  if (o.format != "pretty") {
    std::vector<CoeffRecord> records;
    for (auto &e : table)
      records.push_back({f, e.m, e.k, Route::det, std::move(e.value)});
    emit(records, o.format, out);
    return kOk;
  }
  for (const auto &e : table) {
    if (e.k > 0)
      out << " | ";
    out << to_string(e.value);
    if (e.k == e.m - 1)
      out << '\n';
  }
  return kOk;
}

int cmd_verify(const Options &o, std::ostream &out) {
  auto results = run_suite(o.suite, o.verify_max_m, Execution::parallel);
  std::size_t passed = 0;
  for (const auto &r : results) {
    if (r.pass) {
      ++passed;
      out << "PASS " << r.key << '\n';
    } else {
      out << "FAIL " << r.key;
      if (!r.detail.empty())
        out << ": " << r.detail;
      out << '\n';
    }
  }
  out << passed << '/' << results.size() << " cases passed\n";
  return passed == results.size() ? kOk : kVerifyFailed;
}

int cmd_shape(const Options &o, std::ostream &out) {
  Family f = family_or_throw(o.family);
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  for (const auto &e : compute_table(f, o.max_m, Route::det, Execution::parallel)) {
    ShapeReport s = shape_report(e.value);
    out << family_name(f) << '(' << e.m << ',' << e.k << ")  unimodal "
        << yes_no(s.unimodal) << "  log-concave " << yes_no(s.log_concave)
        << "  palindromic " << yes_no(is_palindromic(e.value)) << '\n';
  }
  return kOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  Options o;
  CLI::App app{"q-Faulhaber and q-Salie coefficient polynomials"};
  app.require_subcommand(1);
  const std::vector<std::string> families = {"P", "Q", "G", "H"};
  const std::vector<std::string> formats = {"pretty", "json", "csv"};

  auto *compute_cmd = app.add_subcommand("compute", "Compute one coefficient");
  compute_cmd->add_option("--family", o.family)->required()
      ->check(CLI::IsMember(families));
  compute_cmd->add_option("--m", o.m)->required();
  compute_cmd->add_option("--k", o.k)->required();
  compute_cmd->add_option("--method", o.method)
      ->check(CLI::IsMember({"det", "lgv", "lgv-det", "invert"}));
  compute_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto *table_cmd = app.add_subcommand("table", "Print the table 0 <= k < m <= max-m");
  table_cmd->add_option("--family", o.family)->required()
      ->check(CLI::IsMember(families));
  table_cmd->add_option("--max-m", o.max_m)->required();
  table_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites(kSuiteNames.begin(), kSuiteNames.end());
  suites.push_back("all");
  verify_cmd->add_option("--suite", o.suite)->check(CLI::IsMember(suites));
  verify_cmd->add_option("--max-m", o.verify_max_m)->check(CLI::PositiveNumber);

  auto *shape_cmd = app.add_subcommand("shape", "Unimodality and log-concavity report");
  shape_cmd->add_option("--family", o.family)->required()
      ->check(CLI::IsMember(families));
  shape_cmd->add_option("--max-m", o.max_m)->required();

  std::vector<const char *> argv = {"qfaul"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    std::ostringstream o_out, o_err;
    int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute_cmd)
      return cmd_compute(o, out, err);
    if (*table_cmd)
      return cmd_table(o, out);
    if (*verify_cmd)
      return cmd_verify(o, out);
    return cmd_shape(o, out);
  } catch (const BadIndex &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

} // namespace qfaul::cli
