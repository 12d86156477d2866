#include "qhopf/expr.hpp"

#include <cctype>

#include "qhopf/errors.hpp"

namespace qhopf {

ExprPtr make_number(mpz_class n) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::number;
  e->number = std::move(n);
  return e;
}

ExprPtr make_q() {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::q;
  return e;
}

ExprPtr make_gen(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::gen;
  e->name = std::move(name);
  return e;
}

ExprPtr make_unary(Expr::Kind kind, ExprPtr x, int exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(x);
  e->exponent = exponent;
  return e;
}

ExprPtr make_binary(Expr::Kind kind, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.number != b.number || a.name != b.name || a.exponent != b.exponent)
    return false;
  if (bool(a.lhs) != bool(b.lhs) || bool(a.rhs) != bool(b.rhs)) return false;
  if (a.lhs && !same_tree(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !same_tree(*a.rhs, *b.rhs)) return false;
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Presentation& p) : s_(src), p_(p) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (i_ < s_.size()) fail(i_, std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(std::size_t pos, const std::string& what) const {
    throw SyntaxError(pos + 1, what);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool atom_start() {
    const char c = peek();
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(';
  }

  ExprPtr expr() {
    ExprPtr e;
    if (peek() == '-') {
      ++i_;
      e = make_unary(Expr::Kind::neg, term());
    } else {
      e = term();
    }
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++i_;
      e = make_binary(c == '+' ? Expr::Kind::add : Expr::Kind::sub, e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (peek() == '/') {
        ++i_;
        e = make_binary(Expr::Kind::div, e, factor());
      } else if (atom_start()) {
        e = make_binary(Expr::Kind::mul, e, factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    ExprPtr e = atom();
    if (peek() == '^') {
      const std::size_t caret = i_++;
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++i_;
      }
      skip();
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
        fail(caret, "expected an integer exponent after '^'");
      const std::string k_text = digits();
      if (k_text.size() > 6) fail(caret, "exponent too large");
      const int k = std::stoi(k_text);
      if (k > 100000) fail(caret, "exponent too large");
      e = make_unary(Expr::Kind::pow, e, negative ? -k : k);
    }
    while (i_ < s_.size() && s_[i_] == '\'') {
      ++i_;
      e = make_unary(Expr::Kind::adj, e);
    }
    return e;
  }

  std::string digits() {
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  ExprPtr atom() {
    const char c = peek();
    const std::size_t start = i_;
    if (c == '(') {
      ++i_;
      ExprPtr e = expr();
      if (peek() != ')') fail(i_, "expected ')'");
      ++i_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return make_number(mpz_class(digits()));
    if (ident_start(c)) {
      while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
      std::string name(s_.substr(start, i_ - start));
      if (i_ < s_.size() && s_[i_] == '\'' && p_.find_letter(name + "'")) {
        name += '\'';
        ++i_;
      }
      if (p_.find_letter(name)) return make_gen(name);
      if (name == "q") return make_q();
      throw UnknownGenerator("column " + std::to_string(start + 1) + ": unknown generator '" +
                             name + "' for algebra " + p_.name());
    }
    if (c == '\0') fail(i_, "unexpected end of input");
    fail(i_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const Presentation& p_;
  std::size_t i_ = 0;
};

// Precedence of the printed form: 0 sum, 1 product, 2 factor, 3 atom.
int level(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub:
    case Expr::Kind::neg: return 0;
    case Expr::Kind::mul:
    case Expr::Kind::div: return 1;
    case Expr::Kind::pow:
    case Expr::Kind::adj: return 2;
    default: return 3;
  }
}

std::string print(const Expr& e, const Presentation& p);

std::string wrap(const Expr& e, const Presentation& p, bool paren) {
  const std::string s = print(e, p);
  return paren ? "(" + s + ")" : s;
}

std::string print(const Expr& e, const Presentation& p) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::number: return e.number.get_str();
    case K::q: return "q";
    case K::gen: return e.name;
    case K::neg: return "-" + wrap(*e.lhs, p, level(*e.lhs) < 1);
    case K::add:
    case K::sub:
      return print(*e.lhs, p) + (e.kind == K::add ? " + " : " - ") +
             wrap(*e.rhs, p, level(*e.rhs) < 1);
    case K::mul:
      return wrap(*e.lhs, p, level(*e.lhs) < 1) + " " + wrap(*e.rhs, p, level(*e.rhs) < 2);
    case K::div:
      return wrap(*e.lhs, p, level(*e.lhs) < 1) + "/" + wrap(*e.rhs, p, level(*e.rhs) < 2);
    case K::pow:
      return wrap(*e.lhs, p, level(*e.lhs) < 3) + "^" + std::to_string(e.exponent);
    case K::adj: {
      // z followed by a prime would lex as the letter z'.
      const bool clash = e.lhs->kind == K::gen && p.find_letter(e.lhs->name + "'");
      return wrap(*e.lhs, p, level(*e.lhs) < 2 || clash) + "'";
    }
  }
  return {};
}

std::optional<QRat> as_scalar(const NCPoly& x) {
  QRat s;
  for (const auto& [w, c] : x.terms()) {
    if (!w.empty()) return std::nullopt;
    s = c;
  }
  return s;
}

}  // namespace

ExprPtr parse(std::string_view src, const Presentation& p) { return Parser(src, p).run(); }

std::string pretty(const Expr& e, const Presentation& p) { return print(e, p); }

NCPoly evaluate(const Expr& e, const Presentation& p) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::number: return NCPoly(p, QRat(mpq_class(e.number)));
    case K::q: return NCPoly(p, QRat::q());
    case K::gen: return NCPoly::generator(p, e.name);
    case K::neg: return -evaluate(*e.lhs, p);
    case K::add: return normalize(evaluate(*e.lhs, p) + evaluate(*e.rhs, p));
    case K::sub: return normalize(evaluate(*e.lhs, p) - evaluate(*e.rhs, p));
    case K::mul: return evaluate(*e.lhs, p) * evaluate(*e.rhs, p);
    case K::div: {
      const auto s = as_scalar(normalize(evaluate(*e.rhs, p)));
      if (!s) throw PreconditionError("division by a non-scalar");
      if (s->is_zero()) throw PreconditionError("division by zero");
      return evaluate(*e.lhs, p) * s->inverse();
    }
    case K::pow: {
      const NCPoly base = normalize(evaluate(*e.lhs, p));
      const unsigned k = static_cast<unsigned>(e.exponent < 0 ? -e.exponent : e.exponent);
      if (e.exponent >= 0) return base.pow(k);
      if (const auto s = as_scalar(base)) {
        if (s->is_zero()) throw PreconditionError("negative power of zero");
        return NCPoly(p, s->inverse().pow(k));
      }
      if (e.lhs->kind == K::gen) {
        const Letter l = *p.find_letter(e.lhs->name);
        if (p.letter(l).unitary) return star(base).pow(k);
      }
      throw PreconditionError("negative power needs a scalar or a unitary generator");
    }
    case K::adj: return star(evaluate(*e.lhs, p));
  }
  return NCPoly(p);
}

NCPoly parse_poly(std::string_view src, const Presentation& p) {
  return evaluate(*parse(src, p), p);
}

}  // namespace qhopf
