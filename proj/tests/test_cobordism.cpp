#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/cobordism.hpp"
#include "skeinlab/verlinde.hpp"

using namespace skeinlab;

TEST_CASE("parser structure and round trip") {
  auto e = parse_cobordism("Y1 . (Psi # PsiBar) . coY2");
  CHECK(e.kind == CobordismExpr::Kind::Compose);
  CHECK(e.to_string() == "Y1 . Psi # PsiBar . coY2");
  // tensor binds tighter than composition, so the round trip is faithful
  auto again = parse_cobordism(e.to_string());
  CHECK(again.to_string() == e.to_string());
  CHECK(typecheck(again) == typecheck(e));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_cobordism("Y1 . bogus");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.position == 5);
  }
  CHECK_THROWS_AS(parse_cobordism(""), ParseError);
  CHECK_THROWS_AS(parse_cobordism("(Y1"), ParseError);
  CHECK_THROWS_AS(parse_cobordism("Y1 . . Y2"), ParseError);
}

TEST_CASE("typechecking tracks arities") {
  CHECK(typecheck(parse_cobordism("Y2")) == Arity{2, 1});
  CHECK(typecheck(parse_cobordism("Y2 . coY2")) == Arity{1, 1});
  CHECK(typecheck(parse_cobordism("Y2 # ci1")) == Arity{3, 1});
  CHECK_THROWS_AS(typecheck(parse_cobordism("Y2 . Psi")), ArityError);
}

TEST_CASE("generator evaluation matches the algebraic maps") {
  auto cat = load_category("ising");
  const int r = cat->rank();

  auto y2 = evaluate(parse_cobordism("Y2"), cat).m;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        CHECK(std::abs(y2(k, i * r + j) -
                       Complex(double(cat->fusion(i, j, k)))) < 1e-15);

  auto psi = evaluate(parse_cobordism("Psi"), cat).m;
  CHECK((psi - cat->s).cwiseAbs().maxCoeff() < 1e-12);

  auto i1 = evaluate(parse_cobordism("i1"), cat).m;
  for (int i = 0; i < r; ++i) CHECK(std::abs(i1(i, 0) - cat->d(i)) < 1e-12);

  auto p = evaluate(parse_cobordism("P"), cat).m;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      CHECK(std::abs(p(j * r + i, i * r + j) - 1.0) < 1e-15);
}

TEST_CASE("Psi squared is the s-matrix squared") {
  auto cat = load_category("fibonacci");
  auto m = evaluate(parse_cobordism("Psi . Psi"), cat).m;
  Matrix expect = cat->s * cat->s;
  CHECK((m - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("proposition suite holds on modular builtins") {
  for (const std::string name :
       {"trivial", "fibonacci", "ising", "semion", "cyclic(3,1)", "su2(3)"}) {
    CAPTURE(name);
    auto cat = load_category(name);
    for (const auto& id : proposition_suite(*cat)) {
      CAPTURE(id.name);
      const Matrix lhs = evaluate(parse_cobordism(id.lhs), cat).m;
      const Matrix rhs = evaluate(parse_cobordism(id.rhs), cat).m;
      CHECK((lhs - id.rhs_scale * rhs).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("check_equal rejects mismatched signatures") {
  auto cat = load_category("fibonacci");
  CHECK(check_equal("Y1 . (Psi # Psi)", "Psi . Y2 . P", cat) < 1e-9);
  CHECK_THROWS_AS(check_equal("Y1", "Psi", cat), ArityError);
}

TEST_CASE("genus words evaluate to handlebody dimensions") {
  for (const std::string name : {"fibonacci", "ising"}) {
    CAPTURE(name);
    auto cat = load_category(name);
    for (int g = 0; g <= 2; ++g) {
      const Matrix fus =
          evaluate(parse_cobordism(genus_word(g, 1, GenusSide::Fusion)), cat).m;
      const Matrix frm =
          evaluate(parse_cobordism(genus_word(g, 1, GenusSide::Formula)), cat)
              .m;
      for (int i = 0; i < cat->rank(); ++i) {
        const auto brute = genus_dim_bruteforce(cat, g, {i});
        CHECK(std::abs(fus(0, i) - Complex(double(brute))) < 1e-6);
        CHECK(std::abs(frm(0, i) / cat->D - Complex(double(brute))) < 1e-6);
      }
    }
  }
}

TEST_CASE("matrix json and csv export") {
  Matrix m(2, 2);
  m << Complex(1.25, -0.5), Complex(0, 1), Complex(3, 0),
      Complex(0.1234567890123456, 7);
  Matrix back = matrix_from_json(matrix_to_json(m));
  CHECK(back.rows() == 2);
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);  // bit-identical
  const std::string csv = matrix_to_csv(m);
  CHECK(csv.find("1.25") != std::string::npos);
}
