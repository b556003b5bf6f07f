#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/category.hpp"

using namespace skeinlab;

TEST_CASE("builtin categories satisfy all structural invariants") {
  for (const std::string name :
       {"trivial", "fibonacci", "ising", "semion", "rep_z2", "cyclic(3,1)",
        "cyclic(3,2)", "su2(1)", "su2(2)", "su2(3)", "su2(4)"}) {
    CAPTURE(name);
    auto cat = load_category(name);
    auto rep = validate(*cat);
    CHECK_MESSAGE(rep.pass(), rep.summary());
    CHECK(rep.max_residual() < 1e-9);
  }
}

TEST_CASE("unit object and duals") {
  auto cat = load_category("ising");
  CHECK(cat->rank() == 3);
  CHECK(cat->dual_of(0) == 0);
  CHECK(cat->fusion(0, 1, 1) == 1);
  CHECK(cat->d(0) == Complex(1.0));
  for (int i = 0; i < cat->rank(); ++i)
    CHECK(std::abs(cat->s(0, i) - cat->d(i)) < 1e-15);
}

TEST_CASE("s-matrix regenerates from the ribbon identity") {
  for (const std::string name : {"fibonacci", "su2(3)", "cyclic(3,1)"}) {
    auto cat = load_category(name);
    Matrix s = s_from_ribbon(*cat);
    CHECK((s - cat->s).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("transparent objects and modularity") {
  auto fib = load_category("fibonacci");
  CHECK(transparent_objects(*fib) == std::vector<int>{0});
  CHECK(is_modular(*fib));

  auto rz2 = load_category("rep_z2");
  CHECK(transparent_objects(*rz2) == std::vector<int>{0, 1});
  CHECK_FALSE(is_modular(*rz2));
}

TEST_CASE("global dimension") {
  auto ising = load_category("ising");
  CHECK(std::abs(global_dim(*ising) - Complex(4.0)) < 1e-12);
  auto fib = load_category("fibonacci");
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(fib->D - Complex(1.0 + phi * phi)) < 1e-12);
}

TEST_CASE("product category multiplies all data componentwise") {
  auto fib = load_category("fibonacci");
  auto ising = load_category("ising");
  auto prod = product_category(*fib, *ising);
  CHECK(prod->rank() == 6);
  CHECK(std::abs(prod->D - fib->D * ising->D) < 1e-12);
  auto rep = validate(*prod);
  CHECK_MESSAGE(rep.pass(), rep.summary());
  CHECK(is_modular(*prod));
}

TEST_CASE("json round trip") {
  auto cat = load_category("su2(2)");
  auto back = category_from_json(category_to_json(*cat));
  CHECK(back->rank() == cat->rank());
  CHECK(back->dual == cat->dual);
  CHECK((back->s - cat->s).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((back->theta - cat->theta).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(validate(*back).pass());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(load_category("nonsense"), CategoryError);
  CHECK_THROWS_AS(load_category("cyclic(0,1)"), CategoryError);
  auto cat = load_category("fibonacci");
  CHECK_THROWS_AS(cat->label_index("zeta"), CategoryError);
}
