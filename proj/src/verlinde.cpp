#include "skeinlab/verlinde.hpp"

#include <algorithm>
#include <cmath>

namespace skeinlab {

VerlindeElement VerlindeElement::basis(CategoryRef cat, int i) {
  Vector v = Vector::Zero(cat->rank());
  v(i) = 1.0;
  return {std::move(cat), std::move(v)};
}

VerlindeElement VerlindeElement::zero(CategoryRef cat) {
  Vector v = Vector::Zero(cat->rank());
  return {std::move(cat), std::move(v)};
}

void require_same_category(const VerlindeElement& x,
                           const VerlindeElement& y) {
  if (!x.cat || !y.cat || x.cat->name != y.cat->name ||
      x.cat->rank() != y.cat->rank())
    throw CategoryError("Verlinde elements live over different categories");
}

VerlindeElement operator+(const VerlindeElement& x, const VerlindeElement& y) {
  require_same_category(x, y);
  return {x.cat, x.coeffs + y.coeffs};
}

VerlindeElement operator-(const VerlindeElement& x, const VerlindeElement& y) {
  require_same_category(x, y);
  return {x.cat, x.coeffs - y.coeffs};
}

VerlindeElement operator*(const Complex& a, const VerlindeElement& x) {
  return {x.cat, a * x.coeffs};
}

double distance(const VerlindeElement& x, const VerlindeElement& y) {
  require_same_category(x, y);
  return (x.coeffs - y.coeffs).cwiseAbs().maxCoeff();
}

VerlindeElement fusion_product(const VerlindeElement& x,
                               const VerlindeElement& y) {
  require_same_category(x, y);
  const auto& cat = *x.cat;
  const int r = cat.rank();
  Vector out = Vector::Zero(r);
  for (int i = 0; i < r; ++i) {
    if (x.coeffs(i) == 0.0) continue;
    for (int j = 0; j < r; ++j) {
      if (y.coeffs(j) == 0.0) continue;
      const Complex cij = x.coeffs(i) * y.coeffs(j);
      for (int k = 0; k < r; ++k) {
        const long long n = cat.fusion(i, j, k);
        if (n) out(k) += static_cast<double>(n) * cij;
      }
    }
  }
  return {x.cat, std::move(out)};
}

VerlindeElement convolution_product(const VerlindeElement& x,
                                    const VerlindeElement& y) {
  require_same_category(x, y);
  Vector out = x.coeffs.cwiseProduct(y.coeffs).cwiseQuotient(x.cat->d);
  return {x.cat, std::move(out)};
}

VerlindeElement s_op(const VerlindeElement& x) {
  // s(x_j) = sum_i s_{ij} x_i; s is symmetric.
  return {x.cat, x.cat->s * x.coeffs};
}

VerlindeElement sbar_op(const VerlindeElement& x) {
  return {x.cat, x.cat->sbar() * x.coeffs};
}

VerlindeElement charge_conjugate(const VerlindeElement& x) {
  Vector out(x.cat->rank());
  for (int i = 0; i < x.cat->rank(); ++i)
    out(x.cat->dual[i]) = x.coeffs(i);
  return {x.cat, std::move(out)};
}

namespace {

Matrix fusion_matrix(const CategoryData& cat) {
  // Columns indexed (i, j) row-major, rows by k.
  const int r = cat.rank();
  Matrix m = Matrix::Zero(r, r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        m(k, i * r + j) = static_cast<double>(cat.fusion(i, j, k));
  return m;
}

Matrix convolution_matrix(const CategoryData& cat) {
  const int r = cat.rank();
  Matrix m = Matrix::Zero(r, r * r);
  for (int i = 0; i < r; ++i) m(i, i * r + i) = 1.0 / cat.d(i);
  return m;
}

}  // namespace

FrobeniusStructure frobenius_maps(const CategoryRef& cat, int variant) {
  if (variant != 1 && variant != 2)
    throw CategoryError("frobenius_maps: variant must be 1 or 2");
  const int r = cat->rank();
  FrobeniusStructure f;
  f.variant = variant;
  if (variant == 1) {
    f.product = convolution_matrix(*cat);
    f.unit = cat->d;
    f.coproduct = Matrix::Zero(r * r, r);
    for (int i = 0; i < r; ++i) f.coproduct(i * r + i, i) = 1.0 / cat->d(i);
    f.counit = cat->d.transpose();
  } else {
    f.product = fusion_matrix(*cat);
    f.unit = Vector::Zero(r);
    f.unit(0) = 1.0;
    f.coproduct = Matrix::Zero(r * r, r);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k)
        for (int a = 0; a < r; ++a)
          if (cat->fusion(i, k, a))
            f.coproduct(a * r + cat->dual[k], i) +=
                static_cast<double>(cat->fusion(i, k, a));
    f.counit = Eigen::RowVectorXcd::Zero(r);
    f.counit(0) = 1.0;
  }
  return f;
}

double IdentityReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

bool IdentityReport::pass(double tol) const {
  return max_residual() <= tol;
}

IdentityReport verify_verlinde(const CategoryRef& cat) {
  IdentityReport report;
  const int r = cat->rank();
  double res_s = 0.0, res_sbar = 0.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      auto xi = VerlindeElement::basis(cat, i);
      auto xj = VerlindeElement::basis(cat, j);
      auto prod = fusion_product(xi, xj);
      res_s = std::max(
          res_s, distance(s_op(prod), convolution_product(s_op(xi), s_op(xj))));
      res_sbar = std::max(res_sbar,
                          distance(sbar_op(prod), convolution_product(
                                                      sbar_op(xi), sbar_op(xj))));
    }
  report.checks.push_back({"s(xy) = s(x)*s(y)", res_s});
  report.checks.push_back({"sbar(xy) = sbar(x)*sbar(y)", res_sbar});
  return report;
}

IdentityReport verify_reverse(const CategoryRef& cat, double tol) {
  IdentityReport report;
  const int r = cat->rank();
  const auto J = transparent_objects(*cat, tol);
  Vector xiJ = Vector::Zero(r);
  for (int t : J) xiJ(t) = cat->D * cat->d(t);
  const VerlindeElement Xi{cat, xiJ};  // D phi_J

  double r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      auto x = VerlindeElement::basis(cat, i);
      auto y = VerlindeElement::basis(cat, j);
      auto lhs1 = convolution_product(fusion_product(Xi, x), y);
      auto lhs2 = convolution_product(x, fusion_product(Xi, y));
      auto rhs_s = fusion_product(s_op(x), s_op(y));
      auto rhs_sbar = fusion_product(sbar_op(x), sbar_op(y));
      r1 = std::max(r1, distance(s_op(lhs1), rhs_s));
      r2 = std::max(r2, distance(s_op(lhs2), rhs_s));
      r3 = std::max(r3, distance(sbar_op(lhs1), rhs_sbar));
      r4 = std::max(r4, distance(sbar_op(lhs2), rhs_sbar));
    }
  report.checks.push_back({"s((Xi x) * y) = s(x) s(y)", r1});
  report.checks.push_back({"s(x * (Xi y)) = s(x) s(y)", r2});
  report.checks.push_back({"sbar((Xi x) * y) = sbar(x) sbar(y)", r3});
  report.checks.push_back({"sbar(x * (Xi y)) = sbar(x) sbar(y)", r4});
  return report;
}

std::vector<std::vector<std::vector<Complex>>> fusion_from_s(
    const CategoryRef& cat, double tol) {
  const int r = cat->rank();
  Eigen::FullPivLU<Matrix> lu(cat->s);
  lu.setThreshold(tol);
  if (!lu.isInvertible())
    throw SingularS("S-matrix is singular; category is not modular");
  const Matrix sinv = lu.inverse();
  std::vector<std::vector<std::vector<Complex>>> N(
      r, std::vector<std::vector<Complex>>(r, std::vector<Complex>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        Complex acc = 0.0;
        for (int l = 0; l < r; ++l)
          acc += cat->s(j, l) * cat->s(i, l) * sinv(l, k) / cat->s(0, l);
        N[i][j][k] = acc;
      }
  return N;
}

Complex genus_dim_formula(const CategoryRef& cat, int g,
                          const std::vector<int>& insertions, double tol) {
  if (g < 0) throw CategoryError("genus must be non-negative");
  if (std::abs(cat->D.imag()) > tol || cat->D.real() <= 0.0)
    throw CategoryError(
        "genus_dim_formula requires a positive real global dimension");
  const double sqrtD = std::sqrt(cat->D.real());
  const int r = cat->rank();
  const int n = static_cast<int>(insertions.size());
  Complex acc = 0.0;
  for (int p = 0; p < r; ++p) {
    const Complex S0p = cat->s(0, p) / sqrtD;
    if (std::abs(S0p) <= tol)
      throw ZeroSEntry("vanishing S_{0p}; category is not modular");
    Complex term = std::pow(S0p, 2 - 2 * g);
    for (int m = 0; m < n; ++m)
      term *= (cat->s(insertions[m], p) / sqrtD) / S0p;
    acc += term;
  }
  return acc;
}

long long genus_dim_bruteforce(const CategoryRef& cat, int g,
                               const std::vector<int>& insertions) {
  if (g < 0) throw CategoryError("genus must be non-negative");
  const int r = cat->rank();
  // Generous guard: the coefficients grow like D^(g-1) * product of dims.
  if (g > 16 || insertions.size() > 16 || r > 64)
    throw SizeGuardExceeded("genus_dim_bruteforce size guard exceeded");

  // Exact integer fusion-ring arithmetic.
  std::vector<long long> acc(r, 0);
  acc[0] = 1;
  auto multiply_basis = [&](const std::vector<long long>& v, int j) {
    std::vector<long long> out(r, 0);
    for (int i = 0; i < r; ++i) {
      if (!v[i]) continue;
      for (int k = 0; k < r; ++k) {
        const long long n = cat->fusion(i, j, k);
        if (n) out[k] += v[i] * n;
      }
    }
    return out;
  };
  for (int h = 0; h < g; ++h) {
    std::vector<long long> next(r, 0);
    for (int k = 0; k < r; ++k) {
      auto term = multiply_basis(acc, k);
      term = multiply_basis(term, cat->dual[k]);
      for (int i = 0; i < r; ++i) next[i] += term[i];
    }
    acc = std::move(next);
  }
  for (int i : insertions) acc = multiply_basis(acc, i);
  return acc[0];
}

}  // namespace skeinlab
