#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/verlinde.hpp"

using namespace skeinlab;

TEST_CASE("fusion and convolution products on basis vectors") {
  auto cat = load_category("fibonacci");
  auto x0 = VerlindeElement::basis(cat, 0);
  auto x1 = VerlindeElement::basis(cat, 1);

  auto tt = fusion_product(x1, x1);  // x_t x_t = x_0 + x_t
  CHECK(std::abs(tt.coeffs(0) - 1.0) < 1e-15);
  CHECK(std::abs(tt.coeffs(1) - 1.0) < 1e-15);

  auto conv = convolution_product(x1, x1);  // (1/d_t) x_t
  CHECK(std::abs(conv.coeffs(0)) < 1e-15);
  CHECK(std::abs(conv.coeffs(1) - 1.0 / cat->d(1)) < 1e-12);
  CHECK(distance(convolution_product(x0, x1), VerlindeElement::zero(cat)) <
        1e-15);
}

TEST_CASE("s_op on the unit gives the dimension vector") {
  auto cat = load_category("ising");
  auto s0 = s_op(VerlindeElement::basis(cat, 0));
  for (int j = 0; j < cat->rank(); ++j)
    CHECK(std::abs(s0.coeffs(j) - cat->d(j)) < 1e-12);
}

TEST_CASE("verlinde identity across builtins and a product category") {
  for (const std::string name :
       {"trivial", "fibonacci", "ising", "semion", "rep_z2", "cyclic(3,1)",
        "su2(3)"}) {
    CAPTURE(name);
    auto cat = load_category(name);
    CHECK(verify_verlinde(cat).max_residual() < 1e-9);
    CHECK(verify_reverse(cat).max_residual() < 1e-9);
  }
  auto prod = product_category(*load_category("fibonacci"),
                               *load_category("ising"));
  CHECK(verify_verlinde(prod).max_residual() < 1e-9);
  CHECK(verify_reverse(prod).max_residual() < 1e-9);
}

TEST_CASE("fusion tensor reconstructed from the s-matrix") {
  for (const std::string name : {"fibonacci", "ising", "su2(4)"}) {
    CAPTURE(name);
    auto cat = load_category(name);
    auto n = fusion_from_s(cat);
    for (int i = 0; i < cat->rank(); ++i)
      for (int j = 0; j < cat->rank(); ++j)
        for (int k = 0; k < cat->rank(); ++k)
          CHECK(std::abs(n[i][j][k] -
                         Complex(double(cat->fusion(i, j, k)))) < 1e-6);
  }
  CHECK_THROWS_AS(fusion_from_s(load_category("rep_z2")), SingularS);
}

TEST_CASE("genus dimension formula matches the exact fusion-ring count") {
  for (const std::string name : {"fibonacci", "ising", "semion", "su2(3)"}) {
    CAPTURE(name);
    auto cat = load_category(name);
    for (int g = 0; g <= 3; ++g)
      for (int i = 0; i < cat->rank(); ++i) {
        const Complex f = genus_dim_formula(cat, g, {i});
        const long long b = genus_dim_bruteforce(cat, g, {i});
        CHECK(std::abs(f - Complex(double(b))) < 1e-6);
      }
  }
  CHECK(genus_dim_bruteforce(load_category("fibonacci"), 2, {}) == 5);
  CHECK(genus_dim_bruteforce(load_category("ising"), 1,
                             {load_category("ising")->label_index("p")}) == 1);
}

TEST_CASE("frobenius maps satisfy the unit and counit normalizations") {
  auto cat = load_category("fibonacci");
  for (int variant : {1, 2}) {
    auto fs = frobenius_maps(cat, variant);
    CHECK(fs.product.rows() == cat->rank());
    CHECK(fs.product.cols() == cat->rank() * cat->rank());
    CHECK(fs.coproduct.rows() == cat->rank() * cat->rank());
  }
  auto f1 = frobenius_maps(cat, 1);
  for (int i = 0; i < cat->rank(); ++i)
    CHECK(std::abs(f1.counit(i) - cat->d(i)) < 1e-15);
  auto f2 = frobenius_maps(cat, 2);
  CHECK(std::abs(f2.unit(0) - 1.0) < 1e-15);
}

TEST_CASE("mismatched categories are rejected") {
  auto a = VerlindeElement::basis(load_category("fibonacci"), 0);
  auto b = VerlindeElement::basis(load_category("ising"), 0);
  CHECK_THROWS_AS(require_same_category(a, b), CategoryError);
}
