#pragma once

// Command-line front end. Kept in a header so tests can drive `run` directly.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "maxmin/maxmin.hpp"

namespace maxmin::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kResourceLimit = 3 };

using format::Json;

/// What a subcommand produced, before it is rendered in the chosen format.
struct Result {
  Json parameters = Json::object();
  Json payload = Json::object();
  std::string text;
  std::string csv;  // empty: CSV not offered for this command
  bool verified = true;
};

struct GlobalOptions {
  std::string output = "text";
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t max_n = 11;

  EnumerationOptions enumeration() const { return {threads, max_n}; }
};

// Largest n accepted per weight algorithm (quadratic routes are capped).
inline std::size_t weight_size_limit(const std::string& algo) {
  if (algo == "recursive" || algo == "descent-sums") return 20'000;
  if (algo == "range") return 200'000;
  return SIZE_MAX;
}

inline Result cmd_weight(const std::string& text, const std::string& algo, bool explain) {
  const Permutation p = parse_permutation(text);
  if (p.size() > weight_size_limit(algo)) {
    throw LimitError("algorithm '" + algo + "' is limited to n <= " +
                     std::to_string(weight_size_limit(algo)));
  }
  std::int64_t w = 0;
  if (algo == "recursive") {
    w = weight_recursive(build_max_weight_tree(p));
  } else if (algo == "descent-sums") {
    w = weight_via_descent_sums(build_max_weight_tree(p));
  } else if (algo == "range") {
    w = weight_via_ranges(p);
  } else if (algo == "leaves") {
    w = weight_via_leaves(build_min_decomp(p));
  } else {
    w = weight_accelerated(p);
  }
  Result r;
  r.parameters = Json{{"permutation", format::to_json(p)}, {"algo", algo}, {"explain", explain}};
  r.payload = Json{{"n", p.size()}, {"descents", descent_count(p)}, {"weight", w}};
  r.text = std::to_string(w) + "\n";
  if (explain) {
    Json rows = Json::array();
    std::ostringstream table;
    table << "weight " << w << "\n";
    table << "position value range descents\n";
    for (const auto& row : subtree_ranges(p)) {
      rows.push_back(Json{{"position", row.position},
                          {"value", row.value},
                          {"left", row.range.left},
                          {"right", row.range.right},
                          {"descents", row.descents}});
      table << row.position << ' ' << row.value << " [" << row.range.left << ", "
            << row.range.right << "] " << row.descents << "\n";
    }
    r.payload["ranges"] = rows;
    r.text = table.str();
  }
  return r;
}

inline Result cmd_tree(const std::string& text, const std::string& kind, const std::string& fmt) {
  const Permutation p = parse_permutation(text);
  Result r;
  r.parameters = Json{{"permutation", format::to_json(p)}, {"kind", kind}, {"format", fmt}};
  if (kind == "mindecomp") {
    const MinDecompTree t = build_min_decomp(p);
    r.payload = fmt == "dot" ? Json{{"dot", format::to_dot(t)}} : format::to_json(t);
    r.text = fmt == "dot" ? format::to_dot(t) : format::to_json(t).dump() + "\n";
  } else {
    const MaxminTree t = build_max_weight_tree(p);
    r.payload = fmt == "dot" ? Json{{"dot", format::to_dot(t)}} : format::to_json(t);
    r.text = fmt == "dot" ? format::to_dot(t) : format::to_json(t).dump() + "\n";
  }
  return r;
}

inline Result cmd_eulerian(std::size_t n, bool with_q, const GlobalOptions& global) {
  Result r;
  r.parameters = Json{{"n", n}, {"q", with_q}};
  if (with_q) {
    const BivariatePolynomial poly = q_eulerian(n, global.enumeration());
    r.payload = format::to_json(n, poly);
    r.text = "E_" + std::to_string(n) + "(x, q) = " + to_string(poly) + "\n";
    r.csv = format::to_csv(poly);
  } else {
    const auto coeffs = eulerian_polynomial(n, global.enumeration());
    BivariatePolynomial as_poly;
    std::ostringstream csv;
    csv << "x,c\n";
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      as_poly.add(d, 0, coeffs[d]);
      csv << d << ',' << coeffs[d] << '\n';
    }
    r.payload = Json{{"n", n}, {"coefficients", coeffs}};
    r.text = "E_" + std::to_string(n) + "(x) = " + to_string(as_poly) + "\n";
    r.csv = csv.str();
  }
  return r;
}

inline Result cmd_wd(std::size_t d, std::size_t terms, const GlobalOptions& global) {
  const WdSeries series = wd_series(d, terms, global.enumeration());
  Result r;
  r.parameters = Json{{"d", d}, {"terms", terms}};
  r.payload = Json{{"d", d}, {"coefficients", series.coefficients}};
  std::ostringstream text, csv;
  csv << "k,a\n";
  for (std::size_t k = 0; k < series.coefficients.size(); ++k) {
    text << (k ? "," : "") << series.coefficients[k];
    csv << k << ',' << series.coefficients[k] << '\n';
  }
  text << '\n';
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

inline std::string partition_string(const Partition& p) {
  std::string s;
  for (auto part : p.parts) s += (s.empty() ? "" : " ") + std::to_string(part);
  return s.empty() ? "()" : s;
}

inline Result cmd_tnk_value(std::size_t n, std::size_t k, bool contributions) {
  Result r;
  const Count value = t_nk(n, k);
  r.parameters = Json{{"n", n}, {"k", k}};
  r.payload = Json{{"n", n}, {"k", k}, {"value", value}};
  std::ostringstream text;
  if (contributions) {
    Json rows = Json::array();
    for (const auto& c : t_nk_contributions(n, k)) {
      rows.push_back(Json{{"parts", c.partition.parts}, {"ways", c.ways}});
      text << partition_string(c.partition) << " : C(" << c.partition.length() << ", " << k
           << ") = " << c.ways << "\n";
    }
    r.payload["contributions"] = rows;
  }
  text << "T(" << n << ", " << k << ") = " << value << "\n";
  r.text = text.str();
  r.csv = "n,k,value\n" + std::to_string(n) + "," + std::to_string(k) + "," +
          std::to_string(value) + "\n";
  return r;
}

inline Result cmd_tnk_triangle(std::size_t n_max) {
  const PartitionTriangle tri = t_triangle(n_max);
  Result r;
  r.parameters = Json{{"triangle", n_max}};
  Json rows = Json::array();
  std::ostringstream text, csv;
  for (std::size_t n = 0; n < tri.rows.size(); ++n) {
    rows.push_back(tri.rows[n]);
    for (std::size_t k = 0; k < tri.rows[n].size(); ++k) {
      const bool bold = PartitionTriangle::bold(n, k);
      text << (k ? " " : "") << (bold ? "*" : "") << tri.rows[n][k];
      csv << (k ? "," : "") << tri.rows[n][k];
    }
    text << '\n';
    csv << '\n';
  }
  text << "(* marks cells with 2k >= n)\n";
  r.payload = Json{{"rows", rows}};
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

inline Result cmd_tnk_crosscheck(const std::string& path, const std::string& file_format) {
  const TriangleFormat fmt = file_format == "csv"     ? TriangleFormat::Csv
                             : file_format == "bfile" ? TriangleFormat::BFile
                                                      : TriangleFormat::Auto;
  const TriangleReport report = crosscheck_triangle(path, fmt);
  Result r;
  r.parameters = Json{{"crosscheck", path}, {"file_format", file_format}};
  Json mismatches = Json::array();
  std::ostringstream text;
  for (const auto& c : report.cells) {
    if (c.match()) continue;
    mismatches.push_back(
        Json{{"n", c.n}, {"k", c.k}, {"file", c.expected}, {"computed", c.actual}});
    text << "mismatch at T(" << c.n << ", " << c.k << "): file " << c.expected << ", computed "
         << c.actual << "\n";
  }
  text << report.cells.size() << " cells checked, " << report.mismatches() << " mismatches\n";
  r.payload = Json{{"cells", report.cells.size()}, {"mismatches", mismatches}, {"ok", report.ok()}};
  r.text = text.str();
  r.verified = report.ok();
  return r;
}

inline Json record_json(const BijectionRecord& rec) {
  return Json{{"n", rec.n},
              {"d", rec.d},
              {"weight", rec.weight},
              {"brute", rec.brute},
              {"stem_total", rec.stem_total},
              {"tnk", rec.tnk},
              {"bold_region", rec.bold_region},
              {"theorem_region", rec.theorem_region},
              {"pass", rec.three_way}};
}

inline Result cmd_verify_bijection(std::size_t n, std::size_t d, std::size_t n_max,
                                   const std::string& region, const GlobalOptions& global) {
  QEulerianTable table(global.enumeration());
  std::vector<BijectionRecord> records;
  if (n != 0 && d != 0) {
    records.push_back(verify_bijection(n, d, table));
  } else {
    check_limit(n_max, table.options());
    for (std::size_t m = 2; m <= n_max; ++m) {
      for (std::size_t e = 1; e < m; ++e) {
        const bool in = region == "theorem" ? m >= 2 * e : 2 * e + 1 >= m;
        if (in) records.push_back(verify_bijection(m, e, table));
      }
    }
  }
  Result r;
  r.parameters = n != 0 && d != 0 ? Json{{"n", n}, {"d", d}}
                                  : Json{{"n_max", n_max}, {"region", region}};
  Json rows = Json::array();
  std::ostringstream text;
  for (const auto& rec : records) {
    rows.push_back(record_json(rec));
    r.verified = r.verified && rec.three_way;
    text << "n=" << rec.n << " d=" << rec.d << " weight=" << rec.weight << ": "
         << (rec.three_way ? "pass" : "FAIL") << ", counts " << rec.brute << " = "
         << rec.stem_total << " = " << rec.tnk << " (brute = stems = T(" << rec.n - 1 << ", "
         << rec.d << "))" << (rec.theorem_region ? "" : " [outside n >= 2d]") << "\n";
  }
  r.payload = Json{{"records", rows}, {"pass", r.verified}};
  r.text = text.str();
  return r;
}

inline std::string labels_string(const std::vector<Label>& labels) {
  std::string s;
  for (Label v : labels) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

inline Result cmd_verify_stems(std::size_t n, std::size_t d) {
  const StemTotalsReport report = verify_stem_totals(n, d);
  Result r;
  r.parameters = Json{{"n", n}, {"d", d}};
  Json stems = Json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < report.stems.size(); ++i) {
    Json row{{"stem", report.stems[i].labels}, {"count", report.counts[i]}};
    text << labels_string(report.stems[i].labels) << ": " << report.counts[i];
    if (!report.partitions.empty()) {
      row["partition"] = report.partitions[i].parts;
      text << "  <-> " << partition_string(report.partitions[i]);
    }
    text << "\n";
    stems.push_back(row);
  }
  text << "total " << report.stem_total << ", T(" << n - 1 << ", " << d << ") = " << report.tnk
       << ", partition map " << (report.injective ? "injective" : "not injective") << ": "
       << (report.ok ? "pass" : "FAIL") << "\n";
  r.payload = Json{{"stems", stems},
                   {"stem_total", report.stem_total},
                   {"tnk", report.tnk},
                   {"injective", report.injective},
                   {"pass", report.ok}};
  r.text = text.str();
  r.verified = report.ok;
  return r;
}

inline Result cmd_verify_stabilization(std::size_t d, std::size_t k, std::size_t n_max,
                                       const GlobalOptions& global) {
  const StabilizationReport report = check_stabilization(d, k, n_max, global.enumeration());
  Result r;
  r.parameters = Json{{"d", d}, {"k", k}, {"n_max", n_max}};
  Json values = Json::array();
  std::ostringstream text;
  for (auto [n, c] : report.values) {
    values.push_back(Json{{"n", n}, {"coefficient", c}});
    text << "n=" << n << ": " << c << "\n";
  }
  text << (report.stable ? "stable" : "NOT stable") << "\n";
  r.payload = Json{{"values", values}, {"stable", report.stable}};
  r.text = text.str();
  r.verified = report.stable;
  return r;
}

inline Result cmd_verify_injectivity(std::size_t n, const GlobalOptions& global) {
  check_limit(n, global.enumeration());
  const bool ok = verify_injectivity(n);
  Result r;
  r.parameters = Json{{"n", n}};
  r.payload = Json{{"injective", ok}};
  r.text = std::string(ok ? "injective" : "NOT injective") + "\n";
  r.verified = ok;
  return r;
}

inline void emit(const std::string& command, const Result& r, const GlobalOptions& global,
                 double elapsed_ms, std::ostream& out) {
  if (global.output == "json") {
    Json envelope{{"command", command},
                  {"parameters", r.parameters},
                  {"result", r.payload},
                  {"elapsed_ms", elapsed_ms},
                  {"version", kVersion}};
    out << envelope.dump(2) << "\n";
  } else if (global.output == "csv") {
    if (r.csv.empty()) throw CLI::ValidationError("--output", "csv is not offered for " + command);
    out << r.csv;
  } else {
    out << r.text;
  }
}

/// Runs one invocation; `args` excludes the program name. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maxmin trees, permutation weights, q-Eulerian polynomials and T(n,k)", "maxmin"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalOptions global;
  app.add_option("--output", global.output, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", global.threads, "Worker threads for enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-n", global.max_n, "Largest n for exhaustive enumeration")
      ->check(CLI::PositiveNumber);

  std::string command;
  std::function<Result()> action;

  // weight
  auto* weight = app.add_subcommand("weight", "Weight of a permutation");
  std::string weight_perm, weight_algo = "fast";
  bool weight_explain = false;
  weight->add_option("perm", weight_perm, "Permutation, e.g. \"1 3 2\"")->required();
  weight->add_option("--algo", weight_algo, "Algorithm")
      ->check(CLI::IsMember({"recursive", "range", "fast", "descent-sums", "leaves"}));
  weight->add_flag("--explain", weight_explain, "Show every non-descent's subtree range");
  weight->callback([&] {
    command = "weight";
    action = [&] { return cmd_weight(weight_perm, weight_algo, weight_explain); };
  });

  // tree
  auto* tree = app.add_subcommand("tree", "Max-weight or minimum decomposition tree");
  std::string tree_perm, tree_kind = "maxweight", tree_format = "json";
  tree->add_option("perm", tree_perm, "Permutation")->required();
  tree->add_option("--kind", tree_kind)->check(CLI::IsMember({"maxweight", "mindecomp"}));
  tree->add_option("--format", tree_format)->check(CLI::IsMember({"dot", "json"}));
  tree->callback([&] {
    command = "tree";
    action = [&] { return cmd_tree(tree_perm, tree_kind, tree_format); };
  });

  // eulerian
  auto* eulerian = app.add_subcommand("eulerian", "Eulerian or q-Eulerian polynomial of S_n");
  std::size_t eulerian_n = 0;
  bool eulerian_q = false;
  eulerian->add_option("n", eulerian_n)->required()->check(CLI::PositiveNumber);
  eulerian->add_flag("--q", eulerian_q, "Include the weight variable q");
  eulerian->callback([&] {
    command = "eulerian";
    action = [&] { return cmd_eulerian(eulerian_n, eulerian_q, global); };
  });

  // wd
  auto* wd = app.add_subcommand("wd", "Coefficients of W_d(t)");
  std::size_t wd_d = 0, wd_terms = 1;
  wd->add_option("d", wd_d)->required()->check(CLI::PositiveNumber);
  wd->add_option("--terms", wd_terms)->check(CLI::PositiveNumber);
  wd->callback([&] {
    command = "wd";
    action = [&] { return cmd_wd(wd_d, wd_terms, global); };
  });

  // tnk
  auto* tnk = app.add_subcommand("tnk", "Two-kind partition counts T(n,k)");
  std::vector<std::size_t> tnk_args;
  std::size_t tnk_triangle = 0;
  std::string tnk_file, tnk_file_format = "auto";
  bool tnk_contributions = false;
  tnk->add_option("n_k", tnk_args, "n and k")->expected(2);
  auto* tri_opt = tnk->add_option("--triangle", tnk_triangle, "Print rows 0..N");
  auto* cross_opt = tnk->add_option("--crosscheck", tnk_file, "Compare against a triangle file");
  tnk->add_option("--file-format", tnk_file_format)
      ->check(CLI::IsMember({"auto", "csv", "bfile"}));
  tnk->add_flag("--contributions", tnk_contributions, "List per-partition binomials");
  tnk->callback([&] {
    command = "tnk";
    if (cross_opt->count() > 0) {
      action = [&] { return cmd_tnk_crosscheck(tnk_file, tnk_file_format); };
    } else if (tri_opt->count() > 0) {
      action = [&] { return cmd_tnk_triangle(tnk_triangle); };
    } else if (tnk_args.size() == 2) {
      action = [&] { return cmd_tnk_value(tnk_args[0], tnk_args[1], tnk_contributions); };
    } else {
      throw CLI::ValidationError("tnk", "give N K, --triangle N or --crosscheck FILE");
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive verification reports");
  verify->require_subcommand(1);
  std::size_t v_n = 0, v_d = 0, v_k = 0, v_n_max = 10;
  std::string v_region = "bold";

  auto* bij = verify->add_subcommand("bijection", "Brute force vs stems vs T(n-1,d)");
  bij->add_option("--n", v_n);
  bij->add_option("--d", v_d);
  bij->add_option("--n-max", v_n_max, "Sweep bound when --n/--d are omitted");
  bij->add_option("--region", v_region, "bold: 2d >= n-1, theorem: n >= 2d")
      ->check(CLI::IsMember({"bold", "theorem"}));
  bij->callback([&] {
    command = "verify bijection";
    if ((v_n == 0) != (v_d == 0)) throw CLI::ValidationError("bijection", "give both --n and --d");
    action = [&] { return cmd_verify_bijection(v_n, v_d, v_n_max, v_region, global); };
  });

  auto* stems = verify->add_subcommand("stems", "Stem enumeration against T(n-1,d)");
  stems->add_option("--n", v_n)->required();
  stems->add_option("--d", v_d)->required();
  stems->callback([&] {
    command = "verify stems";
    action = [&] { return cmd_verify_stems(v_n, v_d); };
  });

  auto* stab = verify->add_subcommand("stabilization", "Constancy of top coefficients");
  stab->add_option("--d", v_d)->required();
  stab->add_option("--k", v_k)->required();
  stab->add_option("--n-max", v_n_max);
  stab->callback([&] {
    command = "verify stabilization";
    action = [&] { return cmd_verify_stabilization(v_d, v_k, v_n_max, global); };
  });

  auto* inj = verify->add_subcommand("injectivity", "Minimum decomposition is injective on S_n");
  inj->add_option("--n", v_n)->required()->check(CLI::PositiveNumber);
  inj->callback([&] {
    command = "verify injectivity";
    action = [&] { return cmd_verify_injectivity(v_n, global); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Result result = action();
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    emit(command, result, global, elapsed.count(), out);
    return result.verified ? kOk : kVerificationFailed;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const TriangleFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error, out_of_range: bad parameters.
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace maxmin::cli
