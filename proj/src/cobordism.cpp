#include "skeinlab/cobordism.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>
#include <unsupported/Eigen/KroneckerProduct>

namespace skeinlab {

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::Y1: return "Y1";
    case Generator::Y2: return "Y2";
    case Generator::CoY1: return "coY1";
    case Generator::CoY2: return "coY2";
    case Generator::I1: return "i1";
    case Generator::I2: return "i2";
    case Generator::Ci1: return "ci1";
    case Generator::Ci2: return "ci2";
    case Generator::Psi: return "Psi";
    case Generator::PsiBar: return "PsiBar";
    case Generator::K: return "K";
    case Generator::P: return "P";
    case Generator::Id: return "Id";
  }
  return "?";
}

CobordismExpr CobordismExpr::leaf(Generator g) {
  CobordismExpr e;
  e.kind = Kind::Leaf;
  e.gen = g;
  return e;
}

CobordismExpr CobordismExpr::compose(CobordismExpr f, CobordismExpr g) {
  CobordismExpr e;
  e.kind = Kind::Compose;
  e.lhs = std::make_shared<CobordismExpr>(std::move(f));
  e.rhs = std::make_shared<CobordismExpr>(std::move(g));
  return e;
}

CobordismExpr CobordismExpr::tensor(CobordismExpr f, CobordismExpr g) {
  CobordismExpr e;
  e.kind = Kind::Tensor;
  e.lhs = std::make_shared<CobordismExpr>(std::move(f));
  e.rhs = std::make_shared<CobordismExpr>(std::move(g));
  return e;
}

std::string CobordismExpr::to_string() const {
  switch (kind) {
    case Kind::Leaf:
      return generator_name(gen);
    case Kind::Compose:
      return lhs->to_string() + " . " + rhs->to_string();
    case Kind::Tensor: {
      auto wrap = [](const CobordismExpr& e) {
        std::string s = e.to_string();
        return e.kind == Kind::Leaf ? s : "(" + s + ")";
      };
      return wrap(*lhs) + " # " + wrap(*rhs);
    }
  }
  return "";
}

namespace {

struct Token {
  enum class Kind { Name, Dot, Hash, LParen, RParen, End } kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '.') {
      tokens.push_back({Token::Kind::Dot, ".", i++});
    } else if (c == '#') {
      tokens.push_back({Token::Kind::Hash, "#", i++});
    } else if (c == '(') {
      tokens.push_back({Token::Kind::LParen, "(", i++});
    } else if (c == ')') {
      tokens.push_back({Token::Kind::RParen, ")", i++});
    } else if (std::isalnum(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[j])))
        ++j;
      tokens.push_back({Token::Kind::Name, text.substr(i, j - i), i});
      i = j;
    } else {
      throw ParseError(std::string("unknown token '") + c + "'", i);
    }
  }
  tokens.push_back({Token::Kind::End, "", text.size()});
  return tokens;
}

const std::map<std::string, Generator>& generator_table() {
  static const std::map<std::string, Generator> table = {
      {"Y1", Generator::Y1},     {"Y2", Generator::Y2},
      {"coY1", Generator::CoY1}, {"coY2", Generator::CoY2},
      {"i1", Generator::I1},     {"i2", Generator::I2},
      {"ci1", Generator::Ci1},   {"ci2", Generator::Ci2},
      {"Psi", Generator::Psi},   {"PsiBar", Generator::PsiBar},
      {"K", Generator::K},       {"P", Generator::P},
      {"Id", Generator::Id}};
  return table;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  CobordismExpr parse() {
    CobordismExpr e = expr();
    if (peek().kind != Token::Kind::End)
      throw ParseError("unexpected input after expression", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  CobordismExpr expr() {
    CobordismExpr head = term();
    if (peek().kind != Token::Kind::Dot) return head;
    take();
    // "f . g . h" groups as Compose(f, Compose(g, h)).
    return CobordismExpr::compose(std::move(head), expr());
  }

  CobordismExpr term() {
    CobordismExpr head = atom();
    while (peek().kind == Token::Kind::Hash) {
      take();
      head = CobordismExpr::tensor(std::move(head), atom());
    }
    return head;
  }

  CobordismExpr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Name: {
        auto it = generator_table().find(t.text);
        if (it == generator_table().end())
          throw ParseError("unknown generator '" + t.text + "'", t.pos);
        take();
        return CobordismExpr::leaf(it->second);
      }
      case Token::Kind::LParen: {
        take();
        CobordismExpr e = expr();
        if (peek().kind != Token::Kind::RParen)
          throw ParseError("expected ')'", peek().pos);
        take();
        return e;
      }
      default:
        throw ParseError("expected generator or '('", t.pos);
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

Arity generator_arity(Generator g) {
  switch (g) {
    case Generator::Y1:
    case Generator::Y2:
      return {2, 1};
    case Generator::CoY1:
    case Generator::CoY2:
      return {1, 2};
    case Generator::I1:
    case Generator::I2:
      return {0, 1};
    case Generator::Ci1:
    case Generator::Ci2:
      return {1, 0};
    case Generator::P:
      return {2, 2};
    default:
      return {1, 1};
  }
}

}  // namespace

CobordismExpr parse_cobordism(const std::string& text) {
  return Parser(lex(text)).parse();
}

Arity typecheck(const CobordismExpr& expr) {
  switch (expr.kind) {
    case CobordismExpr::Kind::Leaf:
      return generator_arity(expr.gen);
    case CobordismExpr::Kind::Compose: {
      const Arity f = typecheck(*expr.lhs);
      const Arity g = typecheck(*expr.rhs);
      if (f.in != g.out)
        throw ArityError("arity mismatch in '" + expr.lhs->to_string() +
                         " . " + expr.rhs->to_string() + "': left expects " +
                         std::to_string(f.in) + " inputs but right produces " +
                         std::to_string(g.out));
      return {g.in, f.out};
    }
    case CobordismExpr::Kind::Tensor: {
      const Arity f = typecheck(*expr.lhs);
      const Arity g = typecheck(*expr.rhs);
      return {f.in + g.in, f.out + g.out};
    }
  }
  throw ArityError("malformed expression");
}

namespace {

/// Generator matrices over the x_i basis; tensor indices row-major with
/// the leftmost factor slowest-varying.
Matrix generator_matrix(Generator g, const CategoryData& cat) {
  const int r = cat.rank();
  switch (g) {
    case Generator::Id:
      return Matrix::Identity(r, r);
    case Generator::Psi:
      return cat.s;
    case Generator::PsiBar:
      return cat.sbar();
    case Generator::Y2: {
      Matrix m = Matrix::Zero(r, r * r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          for (int k = 0; k < r; ++k)
            m(k, i * r + j) = static_cast<double>(cat.fusion(i, j, k));
      return m;
    }
    case Generator::Y1: {
      Matrix m = Matrix::Zero(r, r * r);
      for (int i = 0; i < r; ++i) m(i, i * r + i) = 1.0 / cat.d(i);
      return m;
    }
    case Generator::CoY2: {
      Matrix m = Matrix::Zero(r * r, r);
      for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
          for (int a = 0; a < r; ++a)
            if (cat.fusion(i, k, a))
              m(a * r + cat.dual[k], i) +=
                  static_cast<double>(cat.fusion(i, k, a));
      return m;
    }
    case Generator::CoY1: {
      Matrix m = Matrix::Zero(r * r, r);
      for (int i = 0; i < r; ++i) m(i * r + i, i) = 1.0 / cat.d(i);
      return m;
    }
    case Generator::I1: {
      Matrix m(r, 1);
      m.col(0) = cat.d;
      return m;
    }
    case Generator::I2: {
      Matrix m = Matrix::Zero(r, 1);
      m(0, 0) = 1.0;
      return m;
    }
    case Generator::Ci1: {
      Matrix m(1, r);
      m.row(0) = cat.d.transpose();
      return m;
    }
    case Generator::Ci2: {
      Matrix m = Matrix::Zero(1, r);
      m(0, 0) = 1.0;
      return m;
    }
    case Generator::K: {
      // Fusion multiplication by D * phi_J.
      Matrix m = Matrix::Zero(r, r);
      const auto J = transparent_objects(cat);
      for (int t : J)
        for (int j = 0; j < r; ++j)
          for (int k = 0; k < r; ++k)
            if (cat.fusion(t, j, k))
              m(k, j) += cat.D * cat.d(t) *
                         static_cast<double>(cat.fusion(t, j, k));
      return m;
    }
    case Generator::P: {
      Matrix m = Matrix::Zero(r * r, r * r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(j * r + i, i * r + j) = 1.0;
      return m;
    }
  }
  throw CategoryError("unknown generator");
}

}  // namespace

EvaluatedMap evaluate(const CobordismExpr& expr, const CategoryRef& cat) {
  const Arity sig = typecheck(expr);
  switch (expr.kind) {
    case CobordismExpr::Kind::Leaf:
      return {cat, sig, generator_matrix(expr.gen, *cat)};
    case CobordismExpr::Kind::Compose: {
      const EvaluatedMap f = evaluate(*expr.lhs, cat);
      const EvaluatedMap g = evaluate(*expr.rhs, cat);
      return {cat, sig, f.m * g.m};
    }
    case CobordismExpr::Kind::Tensor: {
      const EvaluatedMap f = evaluate(*expr.lhs, cat);
      const EvaluatedMap g = evaluate(*expr.rhs, cat);
      return {cat, sig, Eigen::kroneckerProduct(f.m, g.m).eval()};
    }
  }
  throw ArityError("malformed expression");
}

double check_equal(const std::string& lhs_text, const std::string& rhs_text,
                   const CategoryRef& cat) {
  const CobordismExpr lhs = parse_cobordism(lhs_text);
  const CobordismExpr rhs = parse_cobordism(rhs_text);
  const Arity a = typecheck(lhs);
  const Arity b = typecheck(rhs);
  if (!(a == b))
    throw ArityError("signature mismatch between '" + lhs_text + "' and '" +
                     rhs_text + "'");
  const Matrix l = evaluate(lhs, cat).m;
  const Matrix r = evaluate(rhs, cat).m;
  if (l.size() == 0) return 0.0;
  return (l - r).cwiseAbs().maxCoeff();
}

std::vector<WordIdentity> proposition_suite(const CategoryData& cat) {
  std::vector<WordIdentity> suite = {
      {"Psi-Yprod (sbar)", "Y1 . (PsiBar # PsiBar)", "PsiBar . Y2"},
      {"Psi-Yprod (s)", "Y1 . (Psi # Psi)", "Psi . Y2 . P"},
      {"Psi-Yprod-rev (s, K left)", "Y2 . (Psi # Psi)",
       "Psi . Y1 . (K # Id)"},
      {"Psi-Yprod-rev (s, K right)", "Y2 . (Psi # Psi)",
       "Psi . Y1 . (Id # K)"},
      {"Psi-Yprod-rev (sbar, K left)", "Y2 . (PsiBar # PsiBar) . P",
       "PsiBar . Y1 . (K # Id)"},
      {"Psi-Yprod-rev (sbar, K right)", "Y2 . (PsiBar # PsiBar) . P",
       "PsiBar . Y1 . (Id # K)"},
      {"Psi-Ycoprod (s)", "(Psi # Psi) . coY1", "coY2 . Psi"},
      {"Psi-Ycoprod (sbar)", "(PsiBar # PsiBar) . coY1",
       "P . coY2 . PsiBar"},
      {"Psi-Ycoprod-rev (sbar, K left)", "(PsiBar # PsiBar) . coY2",
       "(K # Id) . coY1 . PsiBar"},
      {"Psi-Ycoprod-rev (sbar, K right)", "(PsiBar # PsiBar) . coY2",
       "(Id # K) . coY1 . PsiBar"},
      {"Psi-Ycoprod-rev (s, K left)", "P . (Psi # Psi) . coY2",
       "(K # Id) . coY1 . Psi"},
      {"Psi-Ycoprod-rev (s, K right)", "P . (Psi # Psi) . coY2",
       "(Id # K) . coY1 . Psi"},
  };
  for (int v : {1, 2}) {
    const std::string Y = "Y" + std::to_string(v);
    const std::string coY = "coY" + std::to_string(v);
    const std::string i = "i" + std::to_string(v);
    const std::string ci = "ci" + std::to_string(v);
    const std::string tag = " (variant " + std::to_string(v) + ")";
    suite.push_back({"Frobenius assoc-left" + tag, coY + " . " + Y,
                     "(" + Y + " # Id) . (Id # " + coY + ")"});
    suite.push_back({"Frobenius assoc-right" + tag, coY + " . " + Y,
                     "(Id # " + Y + ") . (" + coY + " # Id)"});
    suite.push_back(
        {"counit law left" + tag, "(" + ci + " # Id) . " + coY, "Id"});
    suite.push_back(
        {"counit law right" + tag, "(Id # " + ci + ") . " + coY, "Id"});
    suite.push_back(
        {"unit law left" + tag, Y + " . (" + i + " # Id)", "Id"});
    suite.push_back(
        {"unit law right" + tag, Y + " . (Id # " + i + ")", "Id"});
  }
  if (is_modular(cat))
    suite.push_back({"2-handle factor: ci1 . Psi = D ci2", "ci1 . Psi", "ci2",
                     cat.D});
  return suite;
}

std::string genus_word(int g, int n, GenusSide side) {
  if (g < 0 || n < 1)
    throw CategoryError("genus_word requires g >= 0 and n >= 1");
  std::ostringstream os;
  const bool formula = side == GenusSide::Formula;
  os << (formula ? "ci1" : "ci2");
  for (int h = 0; h < g; ++h)
    os << (formula ? " . Y1 . (K # Id) . coY1" : " . Y2 . coY2");
  // Left-fold multiplication chain reducing n inputs to one.
  const std::string Y = formula ? "Y1" : "Y2";
  for (int m = n; m >= 2; --m) {
    os << " . ";
    if (m == 2) {
      os << Y;
    } else {
      os << "(" << Y;
      for (int t = 0; t < m - 2; ++t) os << " # Id";
      os << ")";
    }
  }
  if (formula) {
    os << " . (Psi";
    for (int m = 1; m < n; ++m) os << " # Psi";
    os << ")";
  }
  return os.str();
}

std::string matrix_to_json(const Matrix& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      data.push_back(nlohmann::json::array({m(i, c).real(), m(i, c).imag()}));
  j["data"] = data;
  return j.dump();
}

Matrix matrix_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  Matrix m(rows, cols);
  const auto& data = j.at("data");
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& e = data.at(i * cols + c);
      m(i, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  return m;
}

std::string matrix_to_csv(const Matrix& m) {
  std::ostringstream os;
  os.precision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ",";
      os << m(i, c).real() << "," << m(i, c).imag();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace skeinlab
