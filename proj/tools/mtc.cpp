#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skeinlab/cobordism.hpp"
#include "skeinlab/genus.hpp"
#include "skeinlab/skein.hpp"

using namespace skeinlab;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  double tol = kDefaultTol;
  std::string fr_path;
};

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt6(const Complex& v) {
  if (v.imag() == 0.0) return fmt6(v.real());
  return fmt6(v.real()) + (v.imag() < 0 ? "-" : "+") +
         fmt6(std::abs(v.imag())) + "i";
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

/// A source is a builtin name (possibly with parameters), a JSON path, or a
/// '*'-separated product of sources.
CategoryRef load_source(const std::string& source) {
  std::vector<std::string> parts;
  size_t start = 0, depth = 0;
  for (size_t i = 0; i <= source.size(); ++i) {
    if (i < source.size() && source[i] == '(') ++depth;
    if (i < source.size() && source[i] == ')') --depth;
    if (i == source.size() || (source[i] == '*' && depth == 0)) {
      parts.push_back(trim(source.substr(start, i - start)));
      start = i + 1;
    }
  }
  CategoryRef cat = load_category(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i)
    cat = product_category(*cat, *load_category(parts[i]));
  return cat;
}

FRData fr_for(const CategoryRef& cat, const Options& opt) {
  if (opt.fr_path.empty()) return load_builtin_fr(cat);
  std::ifstream in(opt.fr_path);
  if (!in) throw CategoryError("cannot open F/R file: " + opt.fr_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return fr_from_json(cat, ss.str());
}

struct CheckLine {
  std::string name;
  double residual = 0.0;
  bool pass = true;
};

int emit_checks(const std::string& command, const std::vector<CheckLine>& checks,
                const Options& opt) {
  bool all = true;
  double worst = 0.0;
  for (const auto& c : checks) {
    all = all && c.pass;
    worst = std::max(worst, c.residual);
  }
  if (opt.format == "json") {
    json out;
    out["command"] = command;
    out["tolerance"] = opt.tol;
    out["max_residual"] = worst;
    out["pass"] = all;
    out["checks"] = json::array();
    for (const auto& c : checks)
      out["checks"].push_back(
          {{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
    std::cout << out.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "name,residual,pass\n";
    for (const auto& c : checks)
      std::cout << c.name << "," << fmt6(c.residual) << ","
                << (c.pass ? "pass" : "FAIL") << "\n";
  } else {
    for (const auto& c : checks)
      std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name
                << "  residual=" << fmt6(c.residual) << "\n";
    std::cout << (all ? "all checks passed" : "CHECKS FAILED")
              << " (max residual " << fmt6(worst) << ", tolerance "
              << fmt6(opt.tol) << ")\n";
  }
  return all ? 0 : 1;
}

void print_matrix(const Matrix& m, const Options& opt) {
  if (opt.format == "json") {
    std::cout << matrix_to_json(m) << "\n";
  } else if (opt.format == "csv") {
    std::cout << matrix_to_csv(m);
  } else {
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c)
        std::cout << (c ? "  " : "") << fmt6(m(r, c));
      std::cout << "\n";
    }
  }
}

int run_list(const Options& opt) {
  const auto names = builtin_names();
  if (opt.format == "json") {
    std::cout << json(names).dump(2) << "\n";
  } else {
    for (const auto& n : names) std::cout << n << "\n";
  }
  return 0;
}

int run_validate(const std::string& src, const Options& opt) {
  auto cat = load_source(src);
  auto rep = validate(*cat, opt.tol);
  std::vector<CheckLine> checks;
  for (const auto& c : rep.checks)
    checks.push_back({c.name, c.max_residual, c.pass});
  return emit_checks("validate " + src, checks, opt);
}

int run_verlinde(const std::string& src, const Options& opt) {
  auto cat = load_source(src);
  std::vector<CheckLine> checks;
  for (const auto& c : verify_verlinde(cat).checks)
    checks.push_back({c.name, c.residual, c.residual <= opt.tol});
  for (const auto& c : verify_reverse(cat, opt.tol).checks)
    checks.push_back({c.name, c.residual, c.residual <= opt.tol});
  return emit_checks("verlinde " + src, checks, opt);
}

int run_genus(const std::string& src, int g, const std::string& ins_text,
              const Options& opt) {
  auto cat = load_source(src);
  std::vector<int> insertions;
  if (!ins_text.empty()) {
    std::stringstream ss(ins_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      try {
        insertions.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        insertions.push_back(cat->label_index(tok));
      }
    }
  }
  const Complex formula = genus_dim_formula(cat, g, insertions, opt.tol);
  const long long brute = genus_dim_bruteforce(cat, g, insertions);
  const double res = std::abs(formula - Complex(double(brute)));
  const bool pass = res <= kIntegerTol;
  if (opt.format == "json") {
    json out;
    out["command"] = "genus " + src;
    out["genus"] = g;
    out["insertions"] = insertions;
    out["formula"] = {formula.real(), formula.imag()};
    out["bruteforce"] = brute;
    out["residual"] = res;
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "formula,bruteforce,residual,pass\n"
              << fmt6(formula) << "," << brute << "," << fmt6(res) << ","
              << (pass ? "pass" : "FAIL") << "\n";
  } else {
    std::printf("formula %.6f, bruteforce %lld, %s\n", formula.real(), brute,
                pass ? "pass" : "FAIL");
  }
  return pass ? 0 : 1;
}

int run_eval(const std::string& src, const std::string& expr_text,
             const std::string& apply_text, const Options& opt) {
  auto cat = load_source(src);
  const auto expr = parse_cobordism(expr_text);
  const auto map = evaluate(expr, cat);
  if (apply_text.empty()) {
    print_matrix(map.m, opt);
    return 0;
  }
  std::vector<Complex> coeffs;
  std::stringstream ss(apply_text);
  std::string tok;
  while (std::getline(ss, tok, ',')) coeffs.push_back(std::stod(trim(tok)));
  if ((long)coeffs.size() != map.m.cols())
    throw ArityError("--apply expects " + std::to_string(map.m.cols()) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  Vector v(map.m.cols());
  for (int i = 0; i < v.size(); ++i) v(i) = coeffs[i];
  print_matrix(map.m * v, opt);
  return 0;
}

int run_props(const std::string& src, const Options& opt) {
  auto cat = load_source(src);
  std::vector<CheckLine> checks;
  for (const auto& id : proposition_suite(*cat)) {
    const Matrix lhs = evaluate(parse_cobordism(id.lhs), cat).m;
    const Matrix rhs = evaluate(parse_cobordism(id.rhs), cat).m;
    const double res = (lhs - id.rhs_scale * rhs).cwiseAbs().maxCoeff();
    checks.push_back({id.name, res, res <= opt.tol});
  }
  return emit_checks("props " + src, checks, opt);
}

int run_handlebody(const std::string& src, int g, const Options& opt) {
  auto cat = load_source(src);
  auto fr = fr_for(cat, opt);
  std::vector<CheckLine> checks;
  for (const auto& c : verify_handlebody_verlinde(fr, g).checks)
    checks.push_back({c.name, c.residual, c.residual <= opt.tol});
  return emit_checks("handlebody " + src, checks, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skeinlab: Verlinde-type identities for (pre)modular data"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tolerance", opt.tol, "comparison tolerance")
      ->envname("MTC_TOLERANCE")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--fr", opt.fr_path, "F/R symbol tables (JSON file)");

  std::string src, expr_text, apply_text, ins_text;
  int g = 1;

  app.add_subcommand("list", "list builtin categories");
  auto* c_validate = app.add_subcommand("validate", "run category invariants");
  c_validate->add_option("category", src)->required();
  auto* c_verlinde =
      app.add_subcommand("verlinde", "Verlinde and reverse formula suites");
  c_verlinde->add_option("category", src)->required();
  auto* c_genus =
      app.add_subcommand("genus", "genus-g dimension, formula vs brute force");
  c_genus->add_option("category", src)->required();
  c_genus->add_option("-g,--genus", g)->required()->check(CLI::NonNegativeNumber);
  c_genus->add_option("-i,--insertions", ins_text,
                      "comma-separated labels or indices");
  auto* c_eval = app.add_subcommand("eval", "evaluate a cobordism word");
  c_eval->add_option("category", src)->required();
  c_eval->add_option("expr", expr_text)->required();
  c_eval->add_option("--apply", apply_text,
                     "apply the map to this coefficient vector");
  auto* c_props =
      app.add_subcommand("props", "proposition and Frobenius identity suite");
  c_props->add_option("category", src)->required();
  auto* c_handle = app.add_subcommand(
      "handlebody", "generalized Verlinde identity on the genus-g algebra");
  c_handle->add_option("category", src)->required();
  c_handle->add_option("-g,--genus", g)->required()->check(CLI::PositiveNumber);

  // let global options (--format, --tolerance, --fr) follow the subcommand
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand("list")) return run_list(opt);
    if (app.got_subcommand(c_validate)) return run_validate(src, opt);
    if (app.got_subcommand(c_verlinde)) return run_verlinde(src, opt);
    if (app.got_subcommand(c_genus)) return run_genus(src, g, ins_text, opt);
    if (app.got_subcommand(c_eval))
      return run_eval(src, expr_text, apply_text, opt);
    if (app.got_subcommand(c_props)) return run_props(src, opt);
    if (app.got_subcommand(c_handle)) return run_handlebody(src, g, opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ArityError& e) {
    std::cerr << "arity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
