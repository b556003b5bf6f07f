#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skeinlab/category.hpp"

namespace skeinlab {

/// Error with a source position (byte offset into the expression text).
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

struct ArityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Generator {
  Y1, Y2, CoY1, CoY2, I1, I2, Ci1, Ci2, Psi, PsiBar, K, P, Id
};

const char* generator_name(Generator g);

/// Typed AST over the cobordism generators; Compose(f, g) is "f after g",
/// Tensor(f, g) is disjoint union with f the leftmost factor.
struct CobordismExpr {
  enum class Kind { Leaf, Compose, Tensor };
  Kind kind = Kind::Leaf;
  Generator gen = Generator::Id;
  std::shared_ptr<const CobordismExpr> lhs, rhs;

  static CobordismExpr leaf(Generator g);
  static CobordismExpr compose(CobordismExpr f, CobordismExpr g);
  static CobordismExpr tensor(CobordismExpr f, CobordismExpr g);

  std::string to_string() const;
};

/// Grammar: expr := term { "." term }*; term := atom { "#" atom }*;
/// atom := generator | "(" expr ")".  "f . g" means f after g.
CobordismExpr parse_cobordism(const std::string& text);

struct Arity {
  int in = 0, out = 0;
  bool operator==(const Arity&) const = default;
};

Arity typecheck(const CobordismExpr& expr);  // throws ArityError

struct EvaluatedMap {
  CategoryRef cat;
  Arity signature;
  Matrix m;  // |Irr|^out x |Irr|^in over the x_i basis
};

EvaluatedMap evaluate(const CobordismExpr& expr, const CategoryRef& cat);

/// Max-entry residual between the evaluations of two expressions; both
/// sides must typecheck with equal signatures.
double check_equal(const std::string& lhs_text, const std::string& rhs_text,
                   const CategoryRef& cat);

/// The paper's proposition and Frobenius identity suite, as pairs of
/// expression texts expected to evaluate equal.
struct WordIdentity {
  std::string name, lhs, rhs;
  Complex rhs_scale = 1.0;  // lhs = rhs_scale * rhs
};
std::vector<WordIdentity> proposition_suite(const CategoryData& cat);

enum class GenusSide { Formula, Fusion };

/// Cobordism words for the genus-g dimension computation with n >= 1
/// inputs.  The fusion side closes with ci2 and evaluates basis inputs to
/// dim V(g, i_1..i_n); the formula side carries K in each loop and closes
/// with ci1, evaluating to D * dim V(g, i_1..i_n) on modular data.
std::string genus_word(int g, int n, GenusSide side);

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);
std::string matrix_to_csv(const Matrix& m);

}  // namespace skeinlab
