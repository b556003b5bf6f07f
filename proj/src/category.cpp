#include "skeinlab/category.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace skeinlab {

namespace {

constexpr double kPi = std::numbers::pi;

Complex cis(double x) { return {std::cos(x), std::sin(x)}; }

CategoryData make_skeleton(std::string name, std::vector<std::string> labels,
                           std::vector<int> dual) {
  CategoryData cat;
  cat.name = std::move(name);
  cat.labels = std::move(labels);
  cat.dual = std::move(dual);
  const int r = cat.rank();
  cat.fusion_.assign(static_cast<size_t>(r) * r * r, 0);
  cat.d = Vector::Zero(r);
  cat.theta = Vector::Ones(r);
  return cat;
}

void finalize(CategoryData& cat) {
  cat.D = global_dim(cat);
  cat.s = s_from_ribbon(cat);
}

}  // namespace

Matrix CategoryData::sbar() const {
  const int r = rank();
  Matrix out(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out(i, j) = s(dual[i], j);
  return out;
}

int CategoryData::label_index(const std::string& label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels[i] == label) return i;
  throw CategoryError("unknown label '" + label + "' in category " + name);
}

bool ValidationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

double ValidationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.max_residual);
  return m;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.name
       << "  residual=" << c.max_residual << "\n";
  }
  return os.str();
}

Matrix s_from_ribbon(const CategoryData& cat) {
  const int r = cat.rank();
  Matrix s(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      Complex acc = 0.0;
      const int is = cat.dual[i];
      for (int k = 0; k < r; ++k) {
        if (cat.fusion(is, j, k) == 0) continue;
        acc += static_cast<double>(cat.fusion(is, j, k)) * cat.d(k) *
               cat.theta(k);
      }
      s(i, j) = acc / (cat.theta(i) * cat.theta(j));
    }
  }
  return s;
}

Complex global_dim(const CategoryData& cat) {
  Complex acc = 0.0;
  for (int i = 0; i < cat.rank(); ++i) acc += cat.d(i) * cat.d(i);
  return acc;
}

std::vector<int> transparent_objects(const CategoryData& cat, double tol) {
  std::vector<int> out;
  for (int i = 0; i < cat.rank(); ++i) {
    bool transparent = true;
    for (int j = 0; j < cat.rank(); ++j) {
      if (std::abs(cat.s(i, j) - cat.d(i) * cat.d(j)) > tol) {
        transparent = false;
        break;
      }
    }
    if (transparent) out.push_back(i);
  }
  return out;
}

bool is_modular(const CategoryData& cat, double tol) {
  return transparent_objects(cat, tol).size() == 1;
}

ValidationReport validate(const CategoryData& cat, double tol) {
  ValidationReport report;
  const int r = cat.rank();

  auto& shape = report.checks.emplace_back(CheckResult{"shape"});
  if (r == 0 || static_cast<int>(cat.dual.size()) != r ||
      static_cast<long long>(cat.fusion_.size()) !=
          static_cast<long long>(r) * r * r ||
      cat.d.size() != r || cat.theta.size() != r || cat.s.rows() != r ||
      cat.s.cols() != r) {
    shape.pass = false;
    shape.max_residual = 1.0;
    return report;  // fatal: numeric checks would index out of bounds
  }

  auto record = [&](CheckResult& c, double res, std::vector<int> idx) {
    c.max_residual = std::max(c.max_residual, res);
    if (res > tol) {
      c.pass = false;
      c.offending.push_back(std::move(idx));
    }
  };

  auto& dualc = report.checks.emplace_back(CheckResult{"dual-involution"});
  for (int i = 0; i < r; ++i) {
    double res = (cat.dual[cat.dual[i]] == i) ? 0.0 : 1.0;
    record(dualc, res, {i});
  }
  record(dualc, cat.dual[0] == 0 ? 0.0 : 1.0, {0});
  for (int i = 0; i < r; ++i) {
    record(dualc, std::abs(cat.d(cat.dual[i]) - cat.d(i)), {i});
    record(dualc, std::abs(cat.theta(cat.dual[i]) - cat.theta(i)), {i});
  }

  auto& unitc = report.checks.emplace_back(CheckResult{"unit-fusion"});
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      double want = (j == k) ? 1.0 : 0.0;
      record(unitc, std::abs(cat.fusion(0, j, k) - want), {0, j, k});
      record(unitc, std::abs(cat.fusion(j, 0, k) - want), {j, 0, k});
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      double want = (j == cat.dual[i]) ? 1.0 : 0.0;
      record(unitc, std::abs(cat.fusion(i, j, 0) - want), {i, j, 0});
    }

  auto& symc = report.checks.emplace_back(CheckResult{"fusion-symmetry"});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        double res = std::abs(
            static_cast<double>(cat.fusion(i, j, k) -
                                cat.fusion(cat.dual[j], cat.dual[i],
                                           cat.dual[k])));
        record(symc, res, {i, j, k});
      }

  auto& assoc = report.checks.emplace_back(CheckResult{"associativity"});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          long long lhs = 0, rhs = 0;
          for (int m = 0; m < r; ++m) {
            lhs += cat.fusion(i, j, m) * cat.fusion(m, k, l);
            rhs += cat.fusion(j, k, m) * cat.fusion(i, m, l);
          }
          record(assoc, std::abs(static_cast<double>(lhs - rhs)),
                 {i, j, k, l});
        }

  auto& dimc = report.checks.emplace_back(CheckResult{"dimension-equation"});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < r; ++k)
        acc += static_cast<double>(cat.fusion(i, j, k)) * cat.d(k);
      record(dimc, std::abs(cat.d(i) * cat.d(j) - acc), {i, j});
    }

  auto& gd = report.checks.emplace_back(CheckResult{"global-dimension"});
  record(gd, std::abs(cat.D - global_dim(cat)), {});
  if (std::abs(cat.D) <= tol) record(gd, 1.0, {});

  auto& ssym = report.checks.emplace_back(CheckResult{"s-symmetric"});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      record(ssym, std::abs(cat.s(i, j) - cat.s(j, i)), {i, j});
  for (int j = 0; j < r; ++j)
    record(ssym, std::abs(cat.s(0, j) - cat.d(j)), {0, j});

  auto& ribbon = report.checks.emplace_back(CheckResult{"ribbon-identity"});
  const Matrix expected = s_from_ribbon(cat);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      record(ribbon, std::abs(cat.s(i, j) - expected(i, j)), {i, j});

  return report;
}

CategoryRef product_category(const CategoryData& a, const CategoryData& b) {
  const int ra = a.rank(), rb = b.rank();
  std::vector<std::string> labels;
  std::vector<int> dual;
  labels.reserve(static_cast<size_t>(ra) * rb);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < rb; ++j) {
      labels.push_back(a.labels[i] + "." + b.labels[j]);
      dual.push_back(a.dual[i] * rb + b.dual[j]);
    }
  CategoryData cat = make_skeleton(a.name + "x" + b.name, std::move(labels),
                                   std::move(dual));
  const int r = cat.rank();
  for (int i = 0; i < r; ++i) {
    cat.d(i) = a.d(i / rb) * b.d(i % rb);
    cat.theta(i) = a.theta(i / rb) * b.theta(i % rb);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        cat.fusion(i, j, k) = a.fusion(i / rb, j / rb, k / rb) *
                              b.fusion(i % rb, j % rb, k % rb);
  finalize(cat);
  return std::make_shared<CategoryData>(std::move(cat));
}

namespace {

CategoryData builtin_trivial() {
  CategoryData cat = make_skeleton("trivial", {"1"}, {0});
  cat.fusion(0, 0, 0) = 1;
  cat.d(0) = 1.0;
  finalize(cat);
  return cat;
}

CategoryData builtin_fibonacci() {
  CategoryData cat = make_skeleton("fibonacci", {"1", "t"}, {0, 1});
  cat.fusion(0, 0, 0) = 1;
  cat.fusion(0, 1, 1) = cat.fusion(1, 0, 1) = 1;
  cat.fusion(1, 1, 0) = cat.fusion(1, 1, 1) = 1;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  cat.d << 1.0, phi;
  cat.theta << 1.0, cis(4.0 * kPi / 5.0);
  finalize(cat);
  return cat;
}

CategoryData builtin_ising() {
  CategoryData cat = make_skeleton("ising", {"1", "s", "p"}, {0, 1, 2});
  auto set = [&](int i, int j, int k) {
    cat.fusion(i, j, k) = 1;
  };
  set(0, 0, 0);
  set(0, 1, 1); set(1, 0, 1);
  set(0, 2, 2); set(2, 0, 2);
  set(1, 1, 0); set(1, 1, 2);
  set(1, 2, 1); set(2, 1, 1);
  set(2, 2, 0);
  cat.d << 1.0, std::sqrt(2.0), 1.0;
  cat.theta << 1.0, cis(kPi / 8.0), -1.0;
  finalize(cat);
  return cat;
}

CategoryData builtin_semion() {
  CategoryData cat = make_skeleton("semion", {"1", "s"}, {0, 1});
  cat.fusion(0, 0, 0) = 1;
  cat.fusion(0, 1, 1) = cat.fusion(1, 0, 1) = 1;
  cat.fusion(1, 1, 0) = 1;
  cat.d << 1.0, 1.0;
  cat.theta << 1.0, Complex(0.0, 1.0);
  finalize(cat);
  return cat;
}

CategoryData builtin_rep_z2() {
  CategoryData cat = make_skeleton("rep_z2", {"1", "p"}, {0, 1});
  cat.fusion(0, 0, 0) = 1;
  cat.fusion(0, 1, 1) = cat.fusion(1, 0, 1) = 1;
  cat.fusion(1, 1, 0) = 1;
  cat.d << 1.0, 1.0;
  cat.theta << 1.0, 1.0;
  finalize(cat);
  return cat;
}

CategoryData builtin_cyclic(long long n, long long t) {
  if (n < 1) throw CategoryError("cyclic: n must be >= 1");
  std::vector<std::string> labels;
  std::vector<int> dual;
  for (long long j = 0; j < n; ++j) {
    labels.push_back("a" + std::to_string(j));
    dual.push_back(static_cast<int>((n - j) % n));
  }
  CategoryData cat = make_skeleton("cyclic(" + std::to_string(n) + "," +
                                       std::to_string(t) + ")",
                                   std::move(labels), std::move(dual));
  const int r = cat.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cat.fusion(i, j, (i + j) % r) = 1;
  for (int j = 0; j < r; ++j) {
    cat.d(j) = 1.0;
    cat.theta(j) = cis(2.0 * kPi * static_cast<double>(t) *
                       static_cast<double>(j) * static_cast<double>(j) /
                       static_cast<double>(n));
  }
  finalize(cat);
  return cat;
}

CategoryData builtin_su2(long long k) {
  if (k < 1) throw CategoryError("su2: level k must be >= 1");
  const int r = static_cast<int>(k) + 1;  // label a = twice the spin
  std::vector<std::string> labels;
  std::vector<int> dual;
  for (int a = 0; a < r; ++a) {
    labels.push_back("j" + std::to_string(a));  // spin a/2
    dual.push_back(a);
  }
  CategoryData cat = make_skeleton("su2(" + std::to_string(k) + ")",
                                   std::move(labels), std::move(dual));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const bool admissible = ((a + b + c) % 2 == 0) &&
                                c >= std::abs(a - b) && c <= a + b &&
                                a + b + c <= 2 * static_cast<int>(k);
        if (admissible) cat.fusion(a, b, c) = 1;
      }
  const double q = kPi / static_cast<double>(k + 2);
  for (int a = 0; a < r; ++a) {
    cat.d(a) = std::sin((a + 1) * q) / std::sin(q);
    cat.theta(a) = cis(kPi * a * (a + 2) / (2.0 * static_cast<double>(k + 2)));
  }
  finalize(cat);
  return cat;
}

long long param_or(const std::map<std::string, long long>& params,
                   const std::string& key, long long fallback,
                   bool required) {
  auto it = params.find(key);
  if (it != params.end()) return it->second;
  if (required)
    throw CategoryError("missing required parameter '" + key + "'");
  return fallback;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"trivial", "fibonacci", "ising", "semion",
          "rep_z2",  "cyclic",    "su2"};
}

CategoryRef load_builtin(const std::string& name,
                         const std::map<std::string, long long>& params) {
  if (name == "trivial")
    return std::make_shared<CategoryData>(builtin_trivial());
  if (name == "fibonacci")
    return std::make_shared<CategoryData>(builtin_fibonacci());
  if (name == "ising") return std::make_shared<CategoryData>(builtin_ising());
  if (name == "semion")
    return std::make_shared<CategoryData>(builtin_semion());
  if (name == "rep_z2")
    return std::make_shared<CategoryData>(builtin_rep_z2());
  if (name == "cyclic")
    return std::make_shared<CategoryData>(builtin_cyclic(
        param_or(params, "n", 0, true), param_or(params, "t", 1, false)));
  if (name == "su2")
    return std::make_shared<CategoryData>(
        builtin_su2(param_or(params, "k", 0, true)));
  throw CategoryError("unknown builtin category '" + name + "'");
}

CategoryRef load_category(const std::string& source) {
  if (source.size() > 5 &&
      source.compare(source.size() - 5, 5, ".json") == 0) {
    std::ifstream in(source);
    if (!in) throw CategoryError("cannot open " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    return category_from_json(buf.str());
  }
  auto paren = source.find('(');
  if (paren == std::string::npos) return load_builtin(source);
  if (source.back() != ')')
    throw CategoryError("malformed category source '" + source + "'");
  const std::string name = source.substr(0, paren);
  std::string args = source.substr(paren + 1, source.size() - paren - 2);
  std::vector<long long> values;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw CategoryError("bad parameter '" + item + "' in '" + source + "'");
    }
  }
  std::map<std::string, long long> params;
  if (name == "su2" && values.size() == 1) {
    params["k"] = values[0];
  } else if (name == "cyclic" && (values.size() == 1 || values.size() == 2)) {
    params["n"] = values[0];
    if (values.size() == 2) params["t"] = values[1];
  } else {
    throw CategoryError("unexpected parameters for '" + name + "'");
  }
  return load_builtin(name, params);
}

namespace {

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw CategoryError("complex values must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json complex_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

}  // namespace

CategoryRef category_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CategoryError(std::string("category JSON parse error: ") + e.what());
  }
  for (const char* key : {"name", "labels", "dual", "N", "d", "theta"})
    if (!j.contains(key))
      throw CategoryError(std::string("category JSON missing field '") + key +
                          "'");
  CategoryData cat;
  cat.name = j["name"].get<std::string>();
  cat.labels = j["labels"].get<std::vector<std::string>>();
  cat.dual = j["dual"].get<std::vector<int>>();
  const int r = cat.rank();
  if (static_cast<int>(cat.dual.size()) != r)
    throw CategoryError("dual length does not match labels");
  cat.fusion_.assign(static_cast<size_t>(r) * r * r, 0);
  const auto& N = j["N"];
  if (static_cast<int>(N.size()) != r)
    throw CategoryError("N tensor has wrong shape");
  for (int i = 0; i < r; ++i)
    for (int jj = 0; jj < r; ++jj)
      for (int k = 0; k < r; ++k)
        cat.fusion(i, jj, k) = N.at(i).at(jj).at(k).get<long long>();
  cat.d = Vector(r);
  cat.theta = Vector(r);
  for (int i = 0; i < r; ++i) {
    cat.d(i) = complex_from_json(j["d"].at(i));
    cat.theta(i) = complex_from_json(j["theta"].at(i));
  }
  cat.D = global_dim(cat);
  if (j.contains("s")) {
    cat.s = Matrix(r, r);
    for (int i = 0; i < r; ++i)
      for (int jj = 0; jj < r; ++jj)
        cat.s(i, jj) = complex_from_json(j["s"].at(i).at(jj));
  } else {
    cat.s = s_from_ribbon(cat);
  }
  return std::make_shared<CategoryData>(std::move(cat));
}

std::string category_to_json(const CategoryData& cat) {
  nlohmann::json j;
  j["name"] = cat.name;
  j["labels"] = cat.labels;
  j["dual"] = cat.dual;
  const int r = cat.rank();
  auto N = nlohmann::json::array();
  for (int i = 0; i < r; ++i) {
    auto Ni = nlohmann::json::array();
    for (int jj = 0; jj < r; ++jj) {
      auto Nij = nlohmann::json::array();
      for (int k = 0; k < r; ++k) Nij.push_back(cat.fusion(i, jj, k));
      Ni.push_back(Nij);
    }
    N.push_back(Ni);
  }
  j["N"] = N;
  auto d = nlohmann::json::array();
  auto theta = nlohmann::json::array();
  for (int i = 0; i < r; ++i) {
    d.push_back(complex_to_json(cat.d(i)));
    theta.push_back(complex_to_json(cat.theta(i)));
  }
  j["d"] = d;
  j["theta"] = theta;
  auto s = nlohmann::json::array();
  for (int i = 0; i < r; ++i) {
    auto row = nlohmann::json::array();
    for (int jj = 0; jj < r; ++jj) row.push_back(complex_to_json(cat.s(i, jj)));
    s.push_back(row);
  }
  j["s"] = s;
  return j.dump(2);
}

}  // namespace skeinlab
