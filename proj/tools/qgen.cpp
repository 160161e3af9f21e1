// qgen: tables, identity suites, enumeration dumps and the positivity scan
// for the q-Genocchi / q-median-Genocchi families.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <qgenocchi/qgenocchi.hpp>
#include <qgenocchi/verify.hpp>

namespace {

using nlohmann::json;
using namespace qgen;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

json poly_json(const QPoly& p) {
  json arr = json::array();
  for (const std::string& c : p.coeff_strings()) arr.push_back(c);
  return arr;
}

std::string csv_cell(const json& value) {
  std::string s = value.dump();
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

// ---- table rendering ----

struct TableData {
  // Row-major labelled grid: one entry per (row, col) that exists.
  std::string row_label;
  std::string col_label;
  std::vector<int> rows;
  std::vector<int> cols;
  std::function<bool(int, int)> in_domain;
  std::function<QPoly(int, int)> entry;
};

void print_grid_text(std::ostream& os, const TableData& t) {
  std::vector<std::vector<std::string>> cells(t.rows.size(), std::vector<std::string>(t.cols.size()));
  for (size_t r = 0; r < t.rows.size(); ++r)
    for (size_t c = 0; c < t.cols.size(); ++c)
      cells[r][c] = t.in_domain(t.rows[r], t.cols[c]) ? t.entry(t.rows[r], t.cols[c]).str() : ".";
  std::vector<size_t> width(t.cols.size());
  std::vector<std::string> col_heads(t.cols.size());
  for (size_t c = 0; c < t.cols.size(); ++c) {
    col_heads[c] = std::to_string(t.cols[c]);
    width[c] = col_heads[c].size();
    for (size_t r = 0; r < t.rows.size(); ++r) width[c] = std::max(width[c], cells[r][c].size());
  }
  const std::string corner = t.row_label + "\\" + t.col_label;
  size_t head_w = corner.size();
  for (int r : t.rows) head_w = std::max(head_w, std::to_string(r).size());
  os << corner << std::string(head_w > corner.size() ? head_w - corner.size() : 0, ' ');
  for (size_t c = 0; c < t.cols.size(); ++c) os << "  " << col_heads[c] << std::string(width[c] - col_heads[c].size(), ' ');
  os << "\n";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const std::string label = std::to_string(t.rows[r]);
    os << label << std::string(head_w - label.size(), ' ');
    for (size_t c = 0; c < t.cols.size(); ++c) os << "  " << cells[r][c] << std::string(width[c] - cells[r][c].size(), ' ');
    os << "\n";
  }
}

void print_grid_csv(std::ostream& os, const TableData& t) {
  os << t.row_label << "," << t.col_label << ",coeffs\n";
  for (int r : t.rows)
    for (int c : t.cols)
      if (t.in_domain(r, c)) os << r << "," << c << "," << csv_cell(poly_json(t.entry(r, c))) << "\n";
}

json grid_json(const TableData& t) {
  json rows = json::array();
  for (int r : t.rows) {
    json row = json::array();
    for (int c : t.cols)
      if (t.in_domain(r, c)) row.push_back(poly_json(t.entry(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct SequenceData {
  std::vector<std::string> names;
  std::vector<QPoly> values;
};

SequenceData sequence_data(char family, int max) {
  SequenceData s;
  for (int n = 1; n <= max; ++n) {
    if (family == 'G') {
      s.names.push_back("G_" + std::to_string(2 * n) + "(q)");
      s.values.push_back(genocchi(n));
    } else if (family == 'H') {
      s.names.push_back("H_" + std::to_string(2 * n - 1) + "(q)");
      s.values.push_back(median_genocchi(n));
    } else {
      s.names.push_back("E_" + std::to_string(2 * (n - 1)) + "(q)");
      s.values.push_back(qeuler(n - 1));
    }
  }
  return s;
}

int cmd_table(const std::string& family, int max, const std::string& format) {
  std::ostream& os = std::cout;
  if (family == "g" || family == "h") {
    const SeidelTriangle tri = family == "g" ? g_triangle(max) : h_triangle(max);
    TableData t;
    t.row_label = "j";
    t.col_label = "i";
    for (int j = SeidelTriangle::row_width(max); j >= 1; --j) t.rows.push_back(j);
    for (int i = 1; i <= max; ++i) t.cols.push_back(i);
    t.in_domain = [](int j, int i) { return j <= SeidelTriangle::row_width(i); };
    t.entry = [&tri](int j, int i) { return tri.at(i, j); };
    if (format == "text") {
      os << "q-Seidel " << family << "-triangle, i <= " << max << "\n";
      print_grid_text(os, t);
    } else if (format == "csv") {
      // emit in (i, j) order for the flat listing
      TableData flat = t;
      flat.row_label = "i";
      flat.col_label = "j";
      flat.rows = t.cols;
      flat.cols.assign(t.rows.rbegin(), t.rows.rend());
      flat.in_domain = [](int i, int j) { return j <= SeidelTriangle::row_width(i); };
      flat.entry = [&tri](int i, int j) { return tri.at(i, j); };
      print_grid_csv(os, flat);
    } else {
      TableData flat = t;
      flat.rows = t.cols;
      flat.cols.assign(t.rows.rbegin(), t.rows.rend());
      flat.in_domain = [](int i, int j) { return j <= SeidelTriangle::row_width(i); };
      flat.entry = [&tri](int i, int j) { return tri.at(i, j); };
      os << grid_json(flat).dump() << "\n";
    }
    return 0;
  }
  if (family == "c" || family == "d") {
    const PolyMatrix table = family == "c" ? c_table(max) : d_table(max);
    TableData t;
    t.row_label = "i";
    t.col_label = "j";
    for (int i = 1; i <= max; ++i) t.rows.push_back(i);
    for (int j = 1; j <= max; ++j) t.cols.push_back(j);
    t.in_domain = [](int i, int j) { return j <= i; };
    t.entry = [&table](int i, int j) { return table.at(i, j); };
    if (format == "text") {
      os << family << "-entries of the inverse " << (family == "c" ? "G_q" : "H_q") << " matrix, i <= " << max << "\n";
      print_grid_text(os, t);
    } else if (format == "csv") {
      print_grid_csv(os, t);
    } else {
      os << grid_json(t).dump() << "\n";
    }
    return 0;
  }
  if (family == "k") {
    if (max < 2) {
      if (format == "text")
        os << "k-triangle: no rows below n = 2\n";
      else if (format == "csv")
        os << "n,i,coeffs\n";
      else
        os << json::array().dump() << "\n";
      return 0;
    }
    std::vector<KTriangleRow> rows;
    for (int n = 2; n <= max; ++n) rows.push_back(k_row(n, KRoute::Corollary3));
    TableData t;
    t.row_label = "n";
    t.col_label = "i";
    for (int n = 2; n <= max; ++n) t.rows.push_back(n);
    for (int i = 1; i <= max - 1; ++i) t.cols.push_back(i);
    t.in_domain = [](int n, int i) { return i <= n - 1; };
    t.entry = [&rows](int n, int i) { return rows[static_cast<size_t>(n - 2)].entry(i); };
    if (format == "text") {
      os << "k-triangle, n <= " << max << "\n";
      print_grid_text(os, t);
    } else if (format == "csv") {
      print_grid_csv(os, t);
    } else {
      os << grid_json(t).dump() << "\n";
    }
    return 0;
  }
  // sequence families
  const SequenceData s = sequence_data(family[0], max);
  if (format == "text") {
    for (size_t i = 0; i < s.values.size(); ++i) os << s.names[i] << " = " << s.values[i].str() << "\n";
  } else if (format == "csv") {
    os << "n,coeffs\n";
    for (size_t i = 0; i < s.values.size(); ++i) os << (i + 1) << "," << csv_cell(poly_json(s.values[i])) << "\n";
  } else {
    json arr = json::array();
    for (const QPoly& p : s.values) arr.push_back(poly_json(p));
    os << arr.dump() << "\n";
  }
  return 0;
}

// ---- verify ----

int cmd_verify(const std::string& suite, int max, int jobs, const std::string& format) {
  const Report report = run_verify_suite(suite, max, jobs);
  if (format == "json") {
    json checks = json::array();
    for (const CheckResult& c : report.checks)
      checks.push_back({{"id", c.id}, {"desc", c.desc}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
    json out{{"suite", report.suite}, {"checks", std::move(checks)}, {"elapsed_ms", report.elapsed_ms}};
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "id,desc,status,witness\n";
    for (const CheckResult& c : report.checks)
      std::cout << c.id << "," << csv_cell(json(c.desc)) << "," << (c.pass ? "pass" : "fail") << ","
                << csv_cell(json(c.witness)) << "\n";
  } else {
    std::cout << "suite " << report.suite << " (max=" << max << ")\n";
    for (const CheckResult& c : report.checks)
      std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.id << "  " << c.desc << "  [" << c.witness << "]\n";
    std::cout << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks.size() << " checks, "
              << report.elapsed_ms << " ms)\n";
  }
  return report.passed() ? 0 : kExitVerifyFailure;
}

// ---- enumerate ----

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_enumerate_pistols(int m, bool strict, int trunc) {
  if (trunc > 0) {
    if (m % 2 != 0) {
      std::cerr << "enumerate pistols: --m must be even when --trunc is used\n";
      return kExitUsage;
    }
    for (const Pistol& p : enumerate_truncated_pistols(m / 2, trunc, strict))
      std::cout << join_ints(p.values, ",") << " st=" << truncated_statistic(p) << "\n";
    return 0;
  }
  for (const Pistol& p : enumerate_pistols(m, strict)) std::cout << join_ints(p.values, ",") << " ch=" << charge(p) << "\n";
  return 0;
}

int cmd_enumerate_perms(int n, bool updown) {
  if (updown) {
    if (n % 2 != 0) {
      std::cerr << "enumerate perms: --updown needs an even --n\n";
      return kExitUsage;
    }
    for_each_updown(n, [](const std::vector<int>& w, int inv) {
      std::cout << join_ints(w, " ") << "  inv=" << inv << "\n";
    });
    return 0;
  }
  if (n % 2 == 0) {
    std::cerr << "enumerate perms: --n must be odd for the alternating family\n";
    return kExitUsage;
  }
  for (const Permutation& s : enumerate_F(n)) {
    const SubexceedantFn f = inversion_table(s);
    bool even = true;
    for (int v : f.values)
      if (v % 2 != 0) even = false;
    std::cout << join_ints(s.images, " ") << "  inv=" << inv_stat(s) << "  table=" << join_ints(f.values, ",")
              << "  even_table=" << (even ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_enumerate_paths(const std::string& kind, int k, int l) {
  const auto configs = kind == "c" ? enumerate_c_configs(k, l) : enumerate_d_configs(k, l);
  for (const PathConfig& cfg : configs) {
    std::string steps;
    for (size_t i = 0; i < cfg.paths.size(); ++i) {
      if (i) steps += " ";
      steps += cfg.paths[i].step_string();
    }
    if (cfg.paths.empty()) steps = "-";
    std::cout << steps << "  area=" << cfg.area() << "\n";
  }
  return 0;
}

int cmd_enumerate_tableaux(const std::string& variant, int k, int l) {
  const FillingVariant v = variant == "row-strict" ? FillingVariant::RowStrict : FillingVariant::ColStrictReverse;
  for (const SkewFilling& t : enumerate_fillings(k, l, v)) {
    std::string rows;
    for (const auto& r : t.rows) rows += "(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + ")";
    if (t.rows.empty()) rows = "()";
    std::cout << rows << "  exp=" << t.weight_exponent() << "\n";
  }
  return 0;
}

// ---- conjecture ----

int cmd_conjecture(int max, const std::string& out_file) {
  const ConjectureReport report = conjecture_scan(max);
  json rows = json::array();
  for (const KTriangleRow& row : report.rows) {
    json entries = json::array();
    Int sum = 0;
    for (const QPoly& p : row.entries) {
      entries.push_back(poly_json(p));
      sum += p.eval_at_one();
    }
    rows.push_back({{"n", row.n}, {"entries", std::move(entries)}, {"row_sum_q1", sum.str()}});
  }
  json violations = json::array();
  for (const ConjectureViolation& v : report.violations)
    violations.push_back({{"n", v.n}, {"i", v.i}, {"exponent", v.exponent}, {"coefficient", v.coefficient.str()}});
  json out{{"max_n", report.nmax},
           {"all_nonnegative", report.all_nonnegative},
           {"rows", std::move(rows)},
           {"violations", std::move(violations)}};
  const std::string text = out.dump() + "\n";
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) {
      std::cerr << "conjecture: cannot write " << out_file << "\n";
      return kExitUsage;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return report.all_nonnegative ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-Genocchi family toolkit"};
  app.fallthrough(true);
  app.require_subcommand(1);

  std::string format = "text";
  int max = 8;
  int jobs = 1;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--max", max, "compute bound");
  app.add_option("--jobs", jobs, "worker threads for verify")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "print a polynomial family");
  std::string family;
  table->add_option("family", family, "one of g h c d k G H E")
      ->required()
      ->check(CLI::IsMember({"g", "h", "c", "d", "k", "G", "H", "E"}));

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(verify_suite_names()));

  auto* enumerate = app.add_subcommand("enumerate", "list combinatorial objects with statistics");
  enumerate->require_subcommand(1);
  auto* en_pistols = enumerate->add_subcommand("pistols", "alternating pistols");
  int en_m = 4, en_trunc = 0;
  bool en_strict = false;
  en_pistols->add_option("--m", en_m, "ground set size")->check(CLI::PositiveNumber);
  en_pistols->add_flag("--strict", en_strict, "strict-alternating variant");
  en_pistols->add_option("--trunc", en_trunc, "truncation index l (pistols on [m] with zeros through 2l)")
      ->check(CLI::NonNegativeNumber);
  auto* en_perms = enumerate->add_subcommand("perms", "alternating permutations with even inversion table");
  int en_n = 3;
  bool en_updown = false;
  en_perms->add_option("--n", en_n, "ground set size")->check(CLI::PositiveNumber);
  en_perms->add_flag("--updown", en_updown, "up-down permutations with descent set {2,4,...}");
  auto* en_paths = enumerate->add_subcommand("paths", "non-intersecting lattice path families");
  std::string en_kind = "c";
  int en_k = 3, en_l = 1;
  en_paths->add_option("--kind", en_kind, "family kind")->check(CLI::IsMember({"c", "d"}));
  en_paths->add_option("--k", en_k)->check(CLI::PositiveNumber);
  en_paths->add_option("--l", en_l)->check(CLI::PositiveNumber);
  auto* en_tab = enumerate->add_subcommand("tableaux", "skew plane-partition fillings");
  std::string en_variant = "row-strict";
  en_tab->add_option("--variant", en_variant)->check(CLI::IsMember({"row-strict", "col-strict-reverse"}));
  en_tab->add_option("--k", en_k)->check(CLI::PositiveNumber);
  en_tab->add_option("--l", en_l)->check(CLI::PositiveNumber);

  auto* conjecture = app.add_subcommand("conjecture", "scan k(n,i) coefficients for negativity");
  std::string out_file;
  conjecture->add_option("--out", out_file, "write the JSON report to a file instead of stdout");

  auto* euler = app.add_subcommand("euler", "print the q-secant numbers");

  bool max_given = false;
  try {
    app.parse(argc, argv);
    max_given = app.count("--max") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(family, max, format);
    if (*verify) return cmd_verify(suite, max_given ? max : 6, jobs, format);
    if (*enumerate) {
      if (*en_pistols) return cmd_enumerate_pistols(en_m, en_strict, en_trunc);
      if (*en_perms) return cmd_enumerate_perms(en_n, en_updown);
      if (*en_paths) return cmd_enumerate_paths(en_kind, en_k, en_l);
      if (*en_tab) return cmd_enumerate_tableaux(en_variant, en_k, en_l);
    }
    if (*conjecture) return cmd_conjecture(max, out_file);
    if (*euler) return cmd_table("E", max_given ? max : 7, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
