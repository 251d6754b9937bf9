#include "ternalg/dsl.hpp"

#include <cctype>
#include <optional>

#include "ternalg/colour.hpp"
#include "ternalg/paraspace.hpp"

namespace ternalg {

SyntaxError::SyntaxError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

UnknownName::UnknownName(const std::string& name, int line, int column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": unknown generator '" + name + "'"),
      name_(name) {}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.name == b.name && a.number == b.number && a.signs == b.signs && a.grades == b.grades &&
         a.has_target == b.has_target && a.children == b.children;
}

namespace {

enum class Tok { kIdent, kNumber, kPunct, kEnd };

struct Token {
  Tok type;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, col = column;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      std::string text(src.substr(i, j - i));
      if (text == "psi" && j + 1 < src.size() && (src[j] == '+' || src[j] == '-') && src[j + 1] == '_') {
        text.push_back(src[j]);
        ++j;
      }
      out.push_back({Tok::kIdent, text, l, col});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::kNumber, std::string(src.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    static constexpr std::string_view kPunct = "+-*/^_()[]{},;";
    if (kPunct.find(c) == std::string_view::npos) throw SyntaxError(std::string("unexpected character '") + c + "'", l, col);
    out.push_back({Tok::kPunct, std::string(1, c), l, col});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().type != Tok::kEnd) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool is(const char* punct, std::size_t ahead = 0) const {
    return peek(ahead).type == Tok::kPunct && peek(ahead).text == punct;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw SyntaxError(t.type == Tok::kEnd ? msg + " at end of input" : msg, t.line, t.column);
  }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  void expect(const char* punct) {
    if (!is(punct)) fail(std::string("expected '") + punct + "'" + (peek().type == Tok::kEnd ? "" : ", found '" + peek().text + "'"));
    ++pos_;
  }
  int integer() {
    if (peek().type != Tok::kNumber) fail("expected an integer");
    const std::string text = take().text;
    if (text.size() > 9) fail("integer too large");
    return std::stoi(text);
  }
  Expr node(Expr::Kind kind, const Token& at) const {
    Expr e;
    e.kind = kind;
    e.line = at.line;
    e.column = at.column;
    return e;
  }

  Expr expr() {
    const Token start = peek();
    Expr first = term();
    if (!is("+") && !is("-")) return first;
    Expr sum = node(Expr::Kind::kSum, start);
    sum.children.push_back(std::move(first));
    sum.signs.push_back(1);
    while (is("+") || is("-")) {
      sum.signs.push_back(take().text == "+" ? 1 : -1);
      sum.children.push_back(term());
    }
    return sum;
  }

  bool factor_start() const {
    const Token& t = peek();
    if (t.type == Tok::kIdent || t.type == Tok::kNumber) return true;
    return is("(") || is("[") || is("{");
  }

  Expr term() {
    const Token start = peek();
    if (is("-")) {
      take();
      Expr neg = node(Expr::Kind::kNegate, start);
      neg.children.push_back(product());
      return neg;
    }
    return product();
  }

  Expr product() {
    const Token start = peek();
    Expr first = factor();
    if (!is("*") && !factor_start()) return first;
    Expr prod = node(Expr::Kind::kProduct, start);
    prod.children.push_back(std::move(first));
    while (is("*") || factor_start()) {
      if (is("*")) take();
      prod.children.push_back(factor());
    }
    return prod;
  }

  std::vector<int> grade() {
    expect("(");
    std::vector<int> g{integer()};
    while (is(",")) {
      take();
      g.push_back(integer());
    }
    expect(")");
    return g;
  }

  Expr factor() {
    const Token t = peek();
    if (t.type == Tok::kNumber) {
      take();
      Expr e = node(Expr::Kind::kNumber, t);
      std::string text = t.text;
      if (is("/")) {
        take();
        if (peek().type != Tok::kNumber) fail("expected a denominator");
        text += "/" + take().text;
      }
      try {
        e.number = Rational::parse(text);
      } catch (const ParseError& err) {
        throw SyntaxError(err.what(), t.line, t.column);
      }
      return e;
    }
    if (is("(")) {
      take();
      Expr e = expr();
      expect(")");
      return e;
    }
    if (is("[")) {
      take();
      Expr e = node(Expr::Kind::kCommutator, t);
      e.children.push_back(expr());
      expect(",");
      e.children.push_back(expr());
      expect("]");
      return e;
    }
    if (is("{")) {
      take();
      Expr e = node(Expr::Kind::kSymmetric, t);
      e.children.push_back(expr());
      expect(",");
      e.children.push_back(expr());
      expect(",");
      e.children.push_back(expr());
      expect("}");
      return e;
    }
    if (t.type != Tok::kIdent) fail(t.type == Tok::kEnd ? "expected an operand" : "unexpected '" + t.text + "'");
    if (t.text == "q") {
      take();
      Expr e = node(Expr::Kind::kQ, t);
      if (!is("^")) return e;
      take();
      const int power = integer();
      if (power == 1) return e;
      Expr prod = node(Expr::Kind::kProduct, t);
      if (power == 0) {
        Expr one = node(Expr::Kind::kNumber, t);
        one.number = Rational(1);
        return one;
      }
      for (int k = 0; k < power; ++k) prod.children.push_back(e);
      return prod;
    }
    if ((t.text == "star" || t.text == "cbr" || t.text == "act") && is("(", 1)) {
      take();
      take();
      if (t.text == "star") {
        Expr e = node(Expr::Kind::kStar, t);
        e.children.push_back(expr());
        expect(")");
        return e;
      }
      if (t.text == "cbr") {
        Expr e = node(Expr::Kind::kColour, t);
        e.grades.push_back(grade());
        expect(",");
        e.grades.push_back(grade());
        expect(",");
        e.grades.push_back(grade());
        expect(";");
        e.children.push_back(expr());
        expect(",");
        e.children.push_back(expr());
        expect(",");
        e.children.push_back(expr());
        if (is(";")) {
          take();
          e.has_target = true;
          e.children.push_back(expr());
        }
        expect(")");
        return e;
      }
      Expr e = node(Expr::Kind::kAct, t);
      e.children.push_back(expr());
      while (is(",")) {
        take();
        e.children.push_back(expr());
      }
      expect(";");
      e.children.push_back(expr());
      expect(")");
      return e;
    }
    return generator();
  }

  Expr generator() {
    const Token t = take();
    Expr e = node(Expr::Kind::kGenerator, t);
    std::string name = t.text;
    if (is("^") || is("_")) {
      const std::string mark = take().text;
      if (mark == "_" && is("{")) {
        take();
        std::string digits;
        while (peek().type == Tok::kNumber) digits += take().text;
        if (digits.size() != 2) fail("expected two indices inside braces");
        expect("}");
        name += "_{" + digits + "}";
      } else {
        name += mark + std::to_string(integer());
      }
    }
    if (is("[") && peek(1).type == Tok::kNumber && is("]", 2)) {
      take();
      name += "[" + std::to_string(integer()) + "]";
      take();
    }
    e.name = name;
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool needs_parens_in_product(const Expr& e) {
  return e.kind == Expr::Kind::kSum || e.kind == Expr::Kind::kNegate || e.kind == Expr::Kind::kProduct;
}

std::string render_grade(const std::vector<int>& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

}  // namespace

Expr parse_expression(std::string_view source) { return Parser(tokenize(source)).parse_all(); }

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kGenerator:
      return e.name;
    case Expr::Kind::kNumber:
      return e.number.to_string();
    case Expr::Kind::kQ:
      return "q";
    case Expr::Kind::kSum: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& c = e.children[i];
        std::string part = c.kind == Expr::Kind::kSum ? "(" + render(c) + ")" : render(c);
        if (i == 0)
          s = e.signs[i] < 0 ? "-(" + part + ")" : part;
        else
          s += (e.signs[i] < 0 ? " - " : " + ") + part;
      }
      return s;
    }
    case Expr::Kind::kNegate: {
      const Expr& c = e.children.front();
      bool paren = c.kind == Expr::Kind::kSum || c.kind == Expr::Kind::kNegate;
      return "-" + (paren ? "(" + render(c) + ")" : render(c));
    }
    case Expr::Kind::kProduct: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& c = e.children[i];
        s += (i ? "*" : "") + (needs_parens_in_product(c) ? "(" + render(c) + ")" : render(c));
      }
      return s;
    }
    case Expr::Kind::kCommutator:
      return "[" + render(e.children[0]) + ", " + render(e.children[1]) + "]";
    case Expr::Kind::kSymmetric:
      return "{" + render(e.children[0]) + ", " + render(e.children[1]) + ", " + render(e.children[2]) + "}";
    case Expr::Kind::kColour: {
      std::string s = "cbr(" + render_grade(e.grades[0]) + "," + render_grade(e.grades[1]) + "," +
                      render_grade(e.grades[2]) + "; " + render(e.children[0]) + ", " + render(e.children[1]) + ", " +
                      render(e.children[2]);
      if (e.has_target) s += "; " + render(e.children[3]);
      return s + ")";
    }
    case Expr::Kind::kStar:
      return "star(" + render(e.children[0]) + ")";
    case Expr::Kind::kAct: {
      std::string s = "act(";
      for (std::size_t i = 0; i + 1 < e.children.size(); ++i) s += (i ? ", " : "") + render(e.children[i]);
      return s + "; " + render(e.children.back()) + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

struct NameParts {
  std::string base;
  char mark = 0;  // '^', '_' or 0
  std::vector<int> indices;
  int component = 0;  // 1-based Green component, 0 for the whole symbol
};

std::optional<NameParts> split_name(const std::string& name) {
  NameParts p;
  std::string rest = name;
  if (!rest.empty() && rest.back() == ']') {
    auto open = rest.rfind('[');
    if (open == std::string::npos) return std::nullopt;
    p.component = std::stoi(rest.substr(open + 1, rest.size() - open - 2));
    rest = rest.substr(0, open);
  }
  auto pos = rest.find_first_of("^_");
  p.base = rest.substr(0, pos);
  if (pos == std::string::npos) return p;
  p.mark = rest[pos];
  std::string idx = rest.substr(pos + 1);
  if (!idx.empty() && idx.front() == '{') idx = idx.substr(1, idx.size() - 2);
  if (idx.empty()) return std::nullopt;
  if (p.mark == '_' && name.find('{') != std::string::npos) {
    for (char c : idx) p.indices.push_back(c - '0');
  } else {
    p.indices.push_back(std::stoi(idx));
  }
  return p;
}

Element resolve(const Expr& e, const SuperspaceAlgebra& alg) {
  auto unknown = [&]() { return UnknownName(e.name, e.line, e.column); };
  auto parts = split_name(e.name);
  if (!parts) throw unknown();
  const int d = alg.dimension();
  auto in_range = [&](int v) { return v >= 0 && v < d; };
  for (int v : parts->indices)
    if (!in_range(v) && parts->base != "V") throw unknown();

  if (parts->component != 0) {
    auto para = alg.find_para(e.name.substr(0, e.name.rfind('[')));
    if (!para || parts->component < 1 || parts->component > SuperspaceConfig::kGreenOrder) throw unknown();
    return Element::generator(alg.system(), alg.component(*para, parts->component - 1));
  }
  const std::string& b = parts->base;
  const bool one = parts->indices.size() == 1;
  const int i0 = one ? parts->indices[0] : 0;
  if (b == "theta") {
    if (parts->mark == 0) return alg.theta_scalar();
    if (!one) throw unknown();
    return parts->mark == '^' ? alg.theta(i0) : alg.theta_lower(i0);
  }
  if (b.size() == 4 && b.rfind("eps", 0) == 0 && b[3] >= '1' && b[3] <= '3' && one) {
    const int family = b[3] - '0';
    return parts->mark == '^' ? alg.eps(family, i0) : alg.eps_lower(family, i0);
  }
  if (b == "d" && parts->mark == '_' && one) return alg.del(i0);
  if (b == "x" && one) return parts->mark == '^' ? alg.x(i0) : alg.x_lower(i0);
  if (b == "P" && parts->mark == '_' && one) return alg.P(i0);
  if ((b == "J" || b == "L") && parts->mark == '_' && parts->indices.size() == 2) {
    const int m = parts->indices[0], n = parts->indices[1];
    return b == "J" ? lorentz_J(alg, m, n) : lorentz_generator(alg, m, n);
  }
  if (b == "V" && parts->mark == '_' && one && i0 >= 1 && i0 <= 3) return v_generator(alg, i0);
  if ((b == "psi+" || b == "psi-") && parts->mark == '_' && one) return psi(alg, b == "psi+" ? 1 : -1, i0);
  throw unknown();
}

Element raw_star(const Element& a) {
  const auto& sys = *a.system();
  Element r(a.system());
  for (const auto& [m, c] : a.terms()) {
    int sign = 1;
    for (auto g : m.raw()) sign *= sys.star_sign({g});
    r.add_term(m.reversed(), sign > 0 ? c.conj() : Cyclo(-1) * c.conj());
  }
  return r;
}

Weights6 weights_from(const Expr& e) {
  std::vector<GradeVector> g;
  for (const auto& grade : e.grades) {
    if (grade.size() != 3)
      throw SyntaxError("colour grades are vectors in Z_3^3 (three components)", e.line, e.column);
    g.emplace_back(grade, 3);
  }
  return colour_weights(cubic_factor(), g[0], g[1], g[2]);
}

Element eval(const Expr& e, const SuperspaceAlgebra& alg, EvalMode mode) {
  const bool raw = mode == EvalMode::kRaw;
  auto mul = [&](const Element& a, const Element& b) { return raw ? raw_product(a, b) : a * b; };
  auto comm = [&](const Element& a, const Element& b) { return raw ? raw_commutator(a, b) : commutator(a, b); };
  switch (e.kind) {
    case Expr::Kind::kGenerator:
      return resolve(e, alg);
    case Expr::Kind::kNumber:
      return alg.scalar(Cyclo(e.number));
    case Expr::Kind::kQ:
      return alg.scalar(Cyclo::q());
    case Expr::Kind::kSum: {
      Element r = alg.zero();
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        Element c = eval(e.children[i], alg, mode);
        if (e.signs[i] < 0)
          r -= c;
        else
          r += c;
      }
      return r;
    }
    case Expr::Kind::kNegate:
      return -eval(e.children.front(), alg, mode);
    case Expr::Kind::kProduct: {
      Element r = eval(e.children.front(), alg, mode);
      for (std::size_t i = 1; i < e.children.size(); ++i) r = mul(r, eval(e.children[i], alg, mode));
      return r;
    }
    case Expr::Kind::kCommutator:
      return comm(eval(e.children[0], alg, mode), eval(e.children[1], alg, mode));
    case Expr::Kind::kSymmetric: {
      Element a = eval(e.children[0], alg, mode), b = eval(e.children[1], alg, mode),
              c = eval(e.children[2], alg, mode);
      return raw ? raw_sym3(a, b, c) : sym3(a, b, c);
    }
    case Expr::Kind::kColour: {
      const Weights6 w = weights_from(e);
      std::array<Element, 3> ops{eval(e.children[0], alg, mode), eval(e.children[1], alg, mode),
                                 eval(e.children[2], alg, mode)};
      static constexpr std::array<std::array<int, 3>, 6> kOrders{
          {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}}};
      if (!raw) {
        if (e.has_target) return colour_action(w, ops, eval(e.children[3], alg, mode));
        return colour3(ops[0], ops[1], ops[2], w);
      }
      Element target = e.has_target ? eval(e.children[3], alg, mode) : alg.zero();
      Element r = alg.zero();
      for (std::size_t k = 0; k < 6; ++k) {
        const auto& o = kOrders[k];
        const Element &a = ops[static_cast<std::size_t>(o[0])], &b = ops[static_cast<std::size_t>(o[1])],
                      &c = ops[static_cast<std::size_t>(o[2])];
        Element term = e.has_target ? comm(a, comm(b, comm(c, target))) : mul(mul(a, b), c);
        r += w[k] * term;
      }
      return r;
    }
    case Expr::Kind::kStar: {
      Element inner = eval(e.children.front(), alg, mode);
      return raw ? raw_star(inner) : star(inner);
    }
    case Expr::Kind::kAct: {
      Element r = eval(e.children.back(), alg, mode);
      for (std::size_t i = e.children.size() - 1; i-- > 0;) r = comm(eval(e.children[i], alg, mode), r);
      return r;
    }
  }
  return alg.zero();
}

}  // namespace

Element evaluate(const Expr& e, const SuperspaceAlgebra& alg, EvalMode mode) { return eval(e, alg, mode); }

Element evaluate(std::string_view source, const SuperspaceAlgebra& alg, EvalMode mode) {
  return eval(parse_expression(source), alg, mode);
}

}  // namespace ternalg
