#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/fusion_trees.hpp"
#include "skeinlab/skein.hpp"

using namespace skeinlab;

namespace {

Matrix braid_adv(const FRData& fr, CombBasis& basis, int p, bool inv) {
  Matrix b = braid_matrix(fr, basis, p, inv);
  auto leaves = basis.leaves;
  std::swap(leaves[p], leaves[p + 1]);
  basis = comb_basis(*fr.cat, leaves);
  return b;
}

}  // namespace

TEST_CASE("builtin F/R tables pass pentagon, hexagons, and twist checks") {
  for (const std::string name :
       {"trivial", "fibonacci", "ising", "semion", "rep_z2"}) {
    CAPTURE(name);
    auto fr = load_builtin_fr(load_category(name));
    auto rep = validate_fr(fr);
    CHECK_MESSAGE(rep.pass(), rep.summary());
    CHECK(rep.max_residual() < 1e-9);
  }
}

TEST_CASE("a mutated F entry breaks the pentagon") {
  auto fr = load_builtin_fr(load_category("fibonacci"));
  FRData bad = fr;
  bad.F[{1, 1, 1, 1, 0, 0}] *= 1.01;
  auto rep = validate_fr(bad);
  CHECK_FALSE(rep.pass());
  bool pentagon_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "pentagon" && !c.pass) pentagon_failed = true;
  CHECK(pentagon_failed);
}

TEST_CASE("comb basis counts agree with hom dimensions") {
  for (const std::string name : {"fibonacci", "ising"}) {
    auto cat = load_category(name);
    for (int a = 0; a < cat->rank(); ++a)
      for (int b = 0; b < cat->rank(); ++b)
        for (int c = 0; c < cat->rank(); ++c) {
          const auto basis = comb_basis(*cat, {a, b, c});
          int count_by_root[8] = {0};
          for (const auto& s : basis.states) ++count_by_root[s.back()];
          for (int k = 0; k < cat->rank(); ++k)
            CHECK(count_by_root[k] == hom_dim(*cat, k, {a, b, c}));
        }
  }
}

TEST_CASE("braids are invertible and satisfy Yang-Baxter") {
  for (const std::string name : {"fibonacci", "ising", "semion"}) {
    CAPTURE(name);
    auto cat = load_category(name);
    auto fr = load_builtin_fr(cat);
    const int r = cat->rank();
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) {
          CombBasis b0 = comb_basis(*cat, {a, b, c});
          if (!b0.size()) continue;
          for (int p = 0; p < 2; ++p) {
            CombBasis cur = b0;
            Matrix f = braid_adv(fr, cur, p, false);
            Matrix g = braid_adv(fr, cur, p, true);
            CHECK((g * f - Matrix::Identity(b0.size(), b0.size()))
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
          }
          CombBasis cur = b0;
          Matrix lhs = braid_adv(fr, cur, 0, false);
          lhs = braid_adv(fr, cur, 1, false) * lhs;
          lhs = braid_adv(fr, cur, 0, false) * lhs;
          cur = b0;
          Matrix rhs = braid_adv(fr, cur, 1, false);
          rhs = braid_adv(fr, cur, 0, false) * rhs;
          rhs = braid_adv(fr, cur, 1, false) * rhs;
          CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
        }
  }
}

TEST_CASE("double braid of a merged pair has the twist eigenvalue") {
  for (const std::string name : {"fibonacci", "ising", "semion"}) {
    CAPTURE(name);
    auto cat = load_category(name);
    auto fr = load_builtin_fr(cat);
    for (int x = 0; x < cat->rank(); ++x)
      for (int y = 0; y < cat->rank(); ++y)
        for (int ch = 0; ch < cat->rank(); ++ch) {
          if (!cat->fusion(x, y, ch)) continue;
          CombBasis b0 = comb_basis(*cat, {x, y});
          CombBasis cur = b0;
          Matrix m0 = braid_adv(fr, cur, 0, false);
          Matrix mono = braid_adv(fr, cur, 0, false) * m0;
          Matrix proj = merge_pair(fr, b0, 0, ch) * mono *
                        split_pair(fr, b0, 0, ch);
          const Complex ev =
              (cat->theta(x) * cat->theta(y)) / cat->theta(ch);
          CHECK(std::abs(proj(0, 0) - ev) < 1e-12);
        }
  }
}

TEST_CASE("merge after split is the identity on each channel") {
  auto cat = load_category("ising");
  auto fr = load_builtin_fr(cat);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        CombBasis b0 = comb_basis(*cat, {a, b, c});
        if (!b0.size()) continue;
        for (int p = 0; p < 2; ++p) {
          const int x = b0.leaves[p], y = b0.leaves[p + 1];
          for (int ch = 0; ch < 3; ++ch) {
            if (!cat->fusion(x, y, ch)) continue;
            Matrix prod = merge_pair(fr, b0, p, ch) * split_pair(fr, b0, p, ch);
            auto ml = b0.leaves;
            ml.erase(ml.begin() + p + 1);
            ml[p] = ch;
            const int n = comb_basis(*cat, ml).size();
            CHECK((prod - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <
                  1e-12);
          }
        }
      }
}

TEST_CASE("partial trace of the identity gives the strand dimension") {
  auto cat = load_category("fibonacci");
  CombBasis basis = comb_basis(*cat, {1, 1, 1});
  Matrix tr = ptrace_last(
      *cat, basis, Matrix::Identity(basis.size(), basis.size()));
  const int n = comb_basis(*cat, {1, 1}).size();
  CHECK((tr - cat->d(1) * Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("F/R tables from json") {
  auto cat = load_category("semion");
  const std::string text = R"({
    "F": [{"i":1,"j":1,"k":1,"l":1,"m":0,"n":0,"v":[-1,0]}],
    "R": [{"i":1,"j":1,"k":0,"v":[0,1]}]
  })";
  auto fr = fr_from_json(cat, text);
  CHECK(std::abs(fr.Fget(1, 1, 1, 1, 0, 0) - Complex(-1.0)) < 1e-15);
  CHECK(std::abs(fr.Rget(1, 1, 0) - Complex(0, 1)) < 1e-15);
  CHECK(validate_fr(fr).pass());
}

TEST_CASE("multiplicity guard") {
  auto su24 = load_category("su2(4)");
  CHECK(multiplicity_free(*load_category("ising")));
  CHECK(multiplicity_free(*su24));
  auto fib = load_category("fibonacci");
  CHECK_THROWS_AS(load_builtin_fr(su24), CategoryError);
  CHECK_NOTHROW(load_builtin_fr(fib));
}
