#include "skeinlab/fusion_trees.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace skeinlab {

namespace {

std::vector<int> channels(const CategoryData& cat, int a, int b) {
  std::vector<int> out;
  for (int c = 0; c < cat.rank(); ++c)
    if (cat.fusion(a, b, c)) out.push_back(c);
  return out;
}

/// Row labels e and column labels f admissible for [F^{abc}_d].
void f_index_sets(const CategoryData& cat, int a, int b, int c, int d,
                  std::vector<int>* rows, std::vector<int>* cols) {
  rows->clear();
  cols->clear();
  for (int e = 0; e < cat.rank(); ++e)
    if (cat.fusion(a, b, e) && cat.fusion(e, c, d)) rows->push_back(e);
  for (int f = 0; f < cat.rank(); ++f)
    if (cat.fusion(b, c, f) && cat.fusion(a, f, d)) cols->push_back(f);
}

Matrix f_matrix(const FRData& fr, int a, int b, int c, int d,
                const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix m(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      m(i, j) = fr.Fget(a, b, c, d, rows[i], cols[j]);
  return m;
}

/// [(F^{abc}_d)^{-1}]_{fe}
Complex finv_entry(const FRData& fr, int a, int b, int c, int d, int f,
                   int e) {
  std::vector<int> rows, cols;
  f_index_sets(*fr.cat, a, b, c, d, &rows, &cols);
  auto ei = std::find(rows.begin(), rows.end(), e);
  auto fi = std::find(cols.begin(), cols.end(), f);
  if (ei == rows.end() || fi == cols.end()) return 0.0;
  if (rows.size() != cols.size())
    throw CategoryError("non-square recoupling block");
  const Matrix inv = f_matrix(fr, a, b, c, d, rows, cols).inverse();
  return inv(fi - cols.begin(), ei - rows.begin());
}

}  // namespace

Complex FRData::Fget(int a, int b, int c, int d, int e, int f) const {
  const auto& n = *cat;
  if (!n.fusion(a, b, e) || !n.fusion(e, c, d) || !n.fusion(b, c, f) ||
      !n.fusion(a, f, d))
    return 0.0;
  const auto it = F.find({a, b, c, d, e, f});
  return it == F.end() ? Complex(1.0) : it->second;
}

Complex FRData::Rget(int i, int j, int k) const {
  if (!cat->fusion(i, j, k)) return 0.0;
  const auto it = R.find({i, j, k});
  return it == R.end() ? Complex(1.0) : it->second;
}

bool multiplicity_free(const CategoryData& cat) {
  const int r = cat.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (cat.fusion(i, j, k) > 1) return false;
  return true;
}

FRData load_builtin_fr(const CategoryRef& cat) {
  if (!multiplicity_free(*cat))
    throw CategoryError("F/R tables require a multiplicity-free category");
  FRData fr;
  fr.cat = cat;
  const std::string& name = cat->name;
  const double pi = std::acos(-1.0);
  auto cis = [&](double t) { return Complex(std::cos(t), std::sin(t)); };
  if (name == "trivial" || name == "rep_z2") {
    // All admissible entries are 1.
  } else if (name == "fibonacci") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    fr.F[{1, 1, 1, 1, 0, 0}] = 1.0 / phi;
    fr.F[{1, 1, 1, 1, 0, 1}] = 1.0 / std::sqrt(phi);
    fr.F[{1, 1, 1, 1, 1, 0}] = 1.0 / std::sqrt(phi);
    fr.F[{1, 1, 1, 1, 1, 1}] = -1.0 / phi;
    fr.R[{1, 1, 0}] = cis(4.0 * pi / 5.0);
    fr.R[{1, 1, 1}] = cis(-3.0 * pi / 5.0);
  } else if (name == "ising") {
    const double is2 = 1.0 / std::sqrt(2.0);
    fr.F[{1, 1, 1, 1, 0, 0}] = is2;
    fr.F[{1, 1, 1, 1, 0, 2}] = is2;
    fr.F[{1, 1, 1, 1, 2, 0}] = is2;
    fr.F[{1, 1, 1, 1, 2, 2}] = -is2;
    fr.F[{1, 2, 1, 2, 1, 1}] = -1.0;
    fr.F[{2, 1, 2, 1, 1, 1}] = -1.0;
    fr.R[{1, 1, 0}] = cis(pi / 8.0);
    fr.R[{1, 1, 2}] = cis(-3.0 * pi / 8.0);
    fr.R[{1, 2, 1}] = Complex(0.0, 1.0);
    fr.R[{2, 1, 1}] = Complex(0.0, 1.0);
    fr.R[{2, 2, 0}] = -1.0;
  } else if (name == "semion") {
    fr.F[{1, 1, 1, 1, 0, 0}] = -1.0;
    fr.R[{1, 1, 0}] = Complex(0.0, 1.0);
  } else {
    throw CategoryError("no embedded F/R tables for category '" + name + "'");
  }
  return fr;
}

FRData fr_from_json(const CategoryRef& cat, const std::string& json_text) {
  if (!multiplicity_free(*cat))
    throw CategoryError("F/R tables require a multiplicity-free category");
  FRData fr;
  fr.cat = cat;
  const auto j = nlohmann::json::parse(json_text);
  if (j.contains("F"))
    for (const auto& e : j.at("F"))
      fr.F[{e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(),
            e.at("l").get<int>(), e.at("m").get<int>(), e.at("n").get<int>()}] =
          Complex(e.at("v").at(0).get<double>(), e.at("v").at(1).get<double>());
  if (j.contains("R"))
    for (const auto& e : j.at("R"))
      fr.R[{e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>()}] =
          Complex(e.at("v").at(0).get<double>(), e.at("v").at(1).get<double>());
  return fr;
}

ValidationReport validate_fr(const FRData& fr, double tol) {
  ValidationReport report;
  const auto& cat = *fr.cat;
  const int r = cat.rank();

  {
    CheckResult c{"multiplicity-free"};
    if (!multiplicity_free(cat)) {
      c.pass = false;
      c.max_residual = 1.0;
    }
    report.checks.push_back(c);
    if (!c.pass) return report;
  }

  {
    CheckResult c{"pentagon"};
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int cc = 0; cc < r; ++cc)
          for (int d = 0; d < r; ++d)
            for (int e = 0; e < r; ++e)
              for (int f = 0; f < r; ++f)
                for (int g = 0; g < r; ++g)
                  for (int k = 0; k < r; ++k)
                    for (int l = 0; l < r; ++l) {
                      const Complex lhs = fr.Fget(f, cc, d, e, g, l) *
                                          fr.Fget(a, b, l, e, f, k);
                      Complex rhs = 0.0;
                      for (int h = 0; h < r; ++h)
                        rhs += fr.Fget(a, b, cc, g, f, h) *
                               fr.Fget(a, h, d, e, g, k) *
                               fr.Fget(b, cc, d, k, h, l);
                      const double res = std::abs(lhs - rhs);
                      if (res > c.max_residual) c.max_residual = res;
                      if (res > tol) {
                        c.pass = false;
                        if (c.offending.size() < 8)
                          c.offending.push_back({a, b, cc, d, e, f, g, k, l});
                      }
                    }
    report.checks.push_back(c);
  }

  auto rinv = [&](int i, int j, int k) -> Complex {
    const Complex v = fr.Rget(i, j, k);
    return v == 0.0 ? Complex(0.0) : 1.0 / v;
  };
  for (int variant = 0; variant < 2; ++variant) {
    CheckResult c{variant == 0 ? "hexagon" : "hexagon-inverse"};
    auto rr = [&](int i, int j, int k) {
      return variant == 0 ? fr.Rget(i, j, k) : rinv(i, j, k);
    };
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int cc = 0; cc < r; ++cc)
          for (int d = 0; d < r; ++d)
            for (int e = 0; e < r; ++e)
              for (int g = 0; g < r; ++g) {
                const Complex lhs = rr(cc, a, e) * fr.Fget(a, cc, b, d, e, g) *
                                    rr(cc, b, g);
                Complex rhs = 0.0;
                for (int f = 0; f < r; ++f)
                  rhs += fr.Fget(cc, a, b, d, e, f) * rr(cc, f, d) *
                         fr.Fget(a, b, cc, d, f, g);
                const double res = std::abs(lhs - rhs);
                if (res > c.max_residual) c.max_residual = res;
                if (res > tol) {
                  c.pass = false;
                  if (c.offending.size() < 8)
                    c.offending.push_back({a, b, cc, d, e, g});
                }
              }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"R-twist consistency"};
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
          if (!cat.fusion(i, j, k)) continue;
          const double res =
              std::abs(cat.theta(k) * fr.Rget(i, j, k) * fr.Rget(j, i, k) -
                       cat.theta(i) * cat.theta(j));
          if (res > c.max_residual) c.max_residual = res;
          if (res > tol) {
            c.pass = false;
            if (c.offending.size() < 8) c.offending.push_back({i, j, k});
          }
        }
    report.checks.push_back(c);
  }

  return report;
}

int CombBasis::index(const std::vector<int>& state) const {
  const auto it = index_.find(state);
  return it == index_.end() ? -1 : it->second;
}

CombBasis comb_basis(const CategoryData& cat, const std::vector<int>& leaves) {
  if (leaves.empty()) throw CategoryError("comb_basis: empty leaf tuple");
  CombBasis basis;
  basis.leaves = leaves;
  basis.states = {{leaves[0]}};
  for (size_t t = 1; t < leaves.size(); ++t) {
    std::vector<std::vector<int>> next;
    for (const auto& s : basis.states)
      for (int c : channels(cat, s.back(), leaves[t])) {
        auto ext = s;
        ext.push_back(c);
        next.push_back(std::move(ext));
      }
    basis.states = std::move(next);
  }
  for (int i = 0; i < basis.size(); ++i) basis.index_[basis.states[i]] = i;
  return basis;
}

Matrix braid_matrix(const FRData& fr, const CombBasis& from, int p,
                    bool inverse) {
  const auto& cat = *fr.cat;
  const int n = static_cast<int>(from.leaves.size());
  if (p < 0 || p + 1 >= n) throw CategoryError("braid position out of range");
  auto swapped = from.leaves;
  std::swap(swapped[p], swapped[p + 1]);
  const CombBasis target = comb_basis(cat, swapped);
  Matrix out = Matrix::Zero(target.size(), from.size());

  const int x = from.leaves[p], y = from.leaves[p + 1];
  for (int js = 0; js < from.size(); ++js) {
    const auto& s = from.states[js];
    if (p == 0) {
      const Complex coeff =
          inverse ? 1.0 / fr.Rget(y, x, s[1]) : fr.Rget(x, y, s[1]);
      auto t = s;
      t[0] = y;
      out(target.index(t), js) += coeff;
      continue;
    }
    const int prev = s[p - 1], top = s[p + 1], e = s[p];
    std::vector<int> rows, cols;  // [F^{prev,y,x}_{top}]: rows e', cols f
    f_index_sets(cat, prev, y, x, top, &rows, &cols);
    if (rows.empty()) continue;
    if (rows.size() != cols.size())
      throw CategoryError("non-square recoupling block");
    const Matrix finv = f_matrix(fr, prev, y, x, top, rows, cols).inverse();
    for (size_t jf = 0; jf < cols.size(); ++jf) {
      const int f = cols[jf];
      const Complex rv =
          inverse ? 1.0 / fr.Rget(y, x, f) : fr.Rget(x, y, f);
      const Complex pre = fr.Fget(prev, x, y, top, e, f) * rv;
      if (pre == 0.0) continue;
      for (size_t je = 0; je < rows.size(); ++je) {
        const Complex coeff = pre * finv(jf, je);
        if (coeff == 0.0) continue;
        auto t = s;
        t[p] = rows[je];
        const int jt = target.index(t);
        if (jt >= 0) out(jt, js) += coeff;
      }
    }
  }
  return out;
}

namespace {

std::vector<int> merged_leaves(const std::vector<int>& leaves, int p, int c) {
  std::vector<int> out;
  for (int q = 0; q < static_cast<int>(leaves.size()); ++q) {
    if (q == p)
      out.push_back(c);
    else if (q != p + 1)
      out.push_back(leaves[q]);
  }
  return out;
}

// Dropping the path label at position p; the channel through the merged
// leaf is the old label above the pair, which stays in place.
std::vector<int> merged_state(const std::vector<int>& s, int p) {
  std::vector<int> t;
  for (int q = 0; q < static_cast<int>(s.size()); ++q)
    if (q != p) t.push_back(s[q]);
  return t;
}

}  // namespace

Matrix merge_pair(const FRData& fr, const CombBasis& from, int p, int c) {
  const auto& cat = *fr.cat;
  const int n = static_cast<int>(from.leaves.size());
  if (p < 0 || p + 1 >= n) throw CategoryError("merge position out of range");
  const CombBasis target = comb_basis(cat, merged_leaves(from.leaves, p, c));
  Matrix out = Matrix::Zero(target.size(), from.size());
  const int x = from.leaves[p], y = from.leaves[p + 1];
  for (int js = 0; js < from.size(); ++js) {
    const auto& s = from.states[js];
    const int prev = p == 0 ? 0 : s[p - 1];
    const int top = s[p + 1], e = p == 0 ? s[0] : s[p];
    const Complex coeff = fr.Fget(prev, x, y, top, e, c);
    if (coeff == 0.0) continue;
    const int jt = target.index(merged_state(s, p));
    if (jt >= 0) out(jt, js) += coeff;
  }
  return out;
}

Matrix split_pair(const FRData& fr, const CombBasis& from, int p, int c) {
  const auto& cat = *fr.cat;
  const int n = static_cast<int>(from.leaves.size());
  if (p < 0 || p + 1 >= n) throw CategoryError("split position out of range");
  const CombBasis target = comb_basis(cat, merged_leaves(from.leaves, p, c));
  Matrix out = Matrix::Zero(from.size(), target.size());
  const int x = from.leaves[p], y = from.leaves[p + 1];
  for (int js = 0; js < from.size(); ++js) {
    const auto& s = from.states[js];
    const int prev = p == 0 ? 0 : s[p - 1];
    const int top = s[p + 1], e = p == 0 ? s[0] : s[p];
    const Complex coeff = finv_entry(fr, prev, x, y, top, c, e);
    if (coeff == 0.0) continue;
    const int jt = target.index(merged_state(s, p));
    if (jt >= 0) out(js, jt) += coeff;
  }
  return out;
}

Matrix ptrace_last(const CategoryData& cat, const CombBasis& basis,
                   const Matrix& op) {
  const int n = static_cast<int>(basis.leaves.size());
  if (n < 2) throw CategoryError("ptrace_last needs at least two leaves");
  const CombBasis target = comb_basis(
      cat, std::vector<int>(basis.leaves.begin(), basis.leaves.end() - 1));
  Matrix out = Matrix::Zero(target.size(), target.size());
  for (int js = 0; js < basis.size(); ++js) {
    const auto& s = basis.states[js];
    for (int jt = 0; jt < basis.size(); ++jt) {
      const auto& t = basis.states[jt];
      if (s[n - 1] != t[n - 1] || s[n - 2] != t[n - 2]) continue;
      if (op(js, jt) == 0.0) continue;
      const std::vector<int> sf(s.begin(), s.end() - 1);
      const std::vector<int> tf(t.begin(), t.end() - 1);
      out(target.index(sf), target.index(tf)) +=
          cat.d(s[n - 1]) / cat.d(s[n - 2]) * op(js, jt);
    }
  }
  return out;
}

}  // namespace skeinlab
