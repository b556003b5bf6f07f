#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "skeinlab/skein.hpp"

using namespace skeinlab;

TEST_CASE("encircling the unit strand gives the loop dimension") {
  for (const std::string name : {"fibonacci", "ising", "su2(3)"}) {
    CAPTURE(name);
    auto cat = load_category(name);
    for (int i = 0; i < cat->rank(); ++i) {
      CHECK(std::abs(encircle(*cat, i, 0, Orientation::Over) - cat->d(i)) <
            1e-12);
      CHECK(std::abs(encircle(*cat, i, 0, Orientation::Under) - cat->d(i)) <
            1e-12);
    }
  }
}

TEST_CASE("over and under encircling use s and sbar") {
  auto cat = load_category("cyclic(3,1)");
  for (int i = 0; i < cat->rank(); ++i)
    for (int j = 0; j < cat->rank(); ++j) {
      CHECK(std::abs(encircle(*cat, i, j, Orientation::Over) -
                     cat->s(i, j) / cat->d(j)) < 1e-12);
      CHECK(std::abs(encircle(*cat, i, j, Orientation::Under) -
                     cat->sbar()(i, j) / cat->d(j)) < 1e-12);
    }
}

TEST_CASE("omega vector carries the dimensions") {
  auto cat = load_category("ising");
  auto omega = omega_vector(cat);
  for (int i = 0; i < cat->rank(); ++i)
    CHECK(std::abs(omega.coeffs(i) - cat->d(i)) < 1e-15);
}

TEST_CASE("killing ring indicates transparency") {
  for (const std::string name :
       {"trivial", "fibonacci", "ising", "semion", "rep_z2", "cyclic(3,1)",
        "su2(2)", "su2(4)"}) {
    CAPTURE(name);
    auto cat = load_category(name);
    const auto transparent = transparent_objects(*cat);
    for (int j = 0; j < cat->rank(); ++j) {
      const bool is_transparent =
          std::find(transparent.begin(), transparent.end(), j) !=
          transparent.end();
      CHECK(std::abs(killing_ring(*cat, j) -
                     Complex(is_transparent ? 1.0 : 0.0)) < 1e-9);
    }
  }
}

TEST_CASE("hom dimensions by iterated fusion") {
  auto fib = load_category("fibonacci");
  CHECK(hom_dim(*fib, 0, {0}) == 1);
  CHECK(hom_dim(*fib, 1, {0}) == 0);
  CHECK(hom_dim(*fib, 0, {1, 1}) == 1);
  CHECK(hom_dim(*fib, 1, {1, 1, 1}) == 2);
  auto ising = load_category("ising");
  CHECK(hom_dim(*ising, 0, {1, 1, 1, 1}) == 2);
  CHECK(hom_dim(*ising, 2, {1, 1}) == 1);
}
