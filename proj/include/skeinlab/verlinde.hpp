#pragma once

#include <vector>

#include "skeinlab/category.hpp"

namespace skeinlab {

/// An element of the Verlinde algebra V = K(A) (x) k, as a coefficient
/// vector over the basis x_i = [X_i].
struct VerlindeElement {
  CategoryRef cat;
  Vector coeffs;

  VerlindeElement() = default;
  VerlindeElement(CategoryRef c, Vector v)
      : cat(std::move(c)), coeffs(std::move(v)) {}

  static VerlindeElement basis(CategoryRef cat, int i);
  static VerlindeElement zero(CategoryRef cat);
};

void require_same_category(const VerlindeElement& x, const VerlindeElement& y);

VerlindeElement operator+(const VerlindeElement& x, const VerlindeElement& y);
VerlindeElement operator-(const VerlindeElement& x, const VerlindeElement& y);
VerlindeElement operator*(const Complex& a, const VerlindeElement& x);
double distance(const VerlindeElement& x, const VerlindeElement& y);

/// x_i x_j = sum_k N_ij^k x_k, extended bilinearly.
VerlindeElement fusion_product(const VerlindeElement& x,
                               const VerlindeElement& y);

/// x_i * x_j = (delta_ij / d_i) x_i, extended bilinearly.
VerlindeElement convolution_product(const VerlindeElement& x,
                                    const VerlindeElement& y);

/// s(x_i) = sum_j s_{ij} x_j.
VerlindeElement s_op(const VerlindeElement& x);
VerlindeElement sbar_op(const VerlindeElement& x);

/// Permutes coefficients by the dual involution i -> i*.
VerlindeElement charge_conjugate(const VerlindeElement& x);

/// One of the two Frobenius structures on V, with the coproduct and counit
/// given as explicit matrices over the x_i basis (tensor index row-major,
/// leftmost factor slowest).
struct FrobeniusStructure {
  int variant = 1;
  Matrix product;              // r x r^2
  Vector unit;                 // r
  Matrix coproduct;            // r^2 x r
  Eigen::RowVectorXcd counit;  // 1 x r
};

FrobeniusStructure frobenius_maps(const CategoryRef& cat, int variant);

struct IdentityCheck {
  std::string name;
  double residual = 0.0;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  double max_residual() const;
  bool pass(double tol = kDefaultTol) const;
};

/// Verlinde formula, s(x_i x_j) = s(x_i) * s(x_j), and the sbar version,
/// over all basis pairs.
IdentityReport verify_verlinde(const CategoryRef& cat);

/// Reverse formula with Xi = D phi_J: s((D phi_J x) * y) = s(x) s(y)
/// (both displayed identities, s and sbar versions), over all basis pairs.
IdentityReport verify_reverse(const CategoryRef& cat, double tol = kDefaultTol);

/// N_ij^k = sum_l s_{jl} s_{il} (s^-1)_{lk} / s_{0l}.  Throws SingularS
/// when the S-matrix is not invertible.
std::vector<std::vector<std::vector<Complex>>> fusion_from_s(
    const CategoryRef& cat, double tol = kDefaultTol);

/// dim V(g, i_1..i_n) via the genus-g Verlinde sum with S = s / sqrt(D).
/// Throws ZeroSEntry when some S_{0p} vanishes; rejects non-real D.
Complex genus_dim_formula(const CategoryRef& cat, int g,
                          const std::vector<int>& insertions,
                          double tol = kDefaultTol);

/// Exact fusion-ring oracle: coefficient of x_0 in
/// (sum_k x_k x_{k*})^g x_{i_1} ... x_{i_n}.
long long genus_dim_bruteforce(const CategoryRef& cat, int g,
                               const std::vector<int>& insertions);

}  // namespace skeinlab
