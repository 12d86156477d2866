#include <doctest.h>

#include "qhopf/errors.hpp"
#include "qhopf/expr.hpp"
#include "support.hpp"

using namespace qhopf;

namespace {

ExprPtr random_tree(const Presentation& p, int depth) {
  auto& g = testsupport::rng();
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 2 : 9);
  using K = Expr::Kind;
  switch (kind(g)) {
    case 0: return make_number(mpz_class(std::uniform_int_distribution<int>(0, 30)(g)));
    case 1: return make_q();
    case 2: {
      std::uniform_int_distribution<std::size_t> l(0, p.size() - 1);
      return make_gen(p.letter(static_cast<Letter>(l(g))).name);
    }
    case 3: return make_unary(K::neg, random_tree(p, depth - 1));
    case 4: return make_binary(K::add, random_tree(p, depth - 1), random_tree(p, depth - 1));
    case 5: return make_binary(K::sub, random_tree(p, depth - 1), random_tree(p, depth - 1));
    case 6: return make_binary(K::mul, random_tree(p, depth - 1), random_tree(p, depth - 1));
    case 7: return make_binary(K::div, random_tree(p, depth - 1), random_tree(p, depth - 1));
    case 8:
      return make_unary(K::pow, random_tree(p, depth - 1), std::uniform_int_distribution<int>(-3, 5)(g));
    default: return make_unary(K::adj, random_tree(p, depth - 1));
  }
}

std::size_t error_column(const std::string& src, const Presentation& p) {
  try {
    parse(src, p);
  } catch (const SyntaxError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_CASE("examples") {
  CHECK(parse_poly("a d - q b c", suq2()) == NCPoly(suq2(), 1));
  CHECK(parse_poly("d a b", suq2()).to_string() == "b + q^-1 b^2 c");
  const NCPoly z = NCPoly::generator(disc(), "z"), zs = NCPoly::generator(disc(), "z'");
  CHECK(parse_poly("(z')^2 z", disc()) == zs * zs * z);
  CHECK(parse_poly("z'^2 z", disc()) == zs * zs * z);
  CHECK(parse_poly("(z)' z", disc()) == zs * z);
  CHECK(parse_poly("(1-q^2)/(1+q) a", suq2()).to_string() == "(1 - q) a");
  CHECK(parse_poly("v^-2 v^3", circle()).to_string() == "v");
  CHECK(parse_poly("(a b)'", suq2()).to_string() == "-q c d");
  CHECK(parse_poly("-a + 2 a", suq2()).to_string() == "a");
}

TEST_CASE("tree shape") {
  const ExprPtr e = parse("a - b - c", suq2());
  REQUIRE(e->kind == Expr::Kind::sub);
  CHECK(e->lhs->kind == Expr::Kind::sub);
  const ExprPtr m = parse("a b + c d", suq2());
  CHECK(m->kind == Expr::Kind::add);
  CHECK(m->lhs->kind == Expr::Kind::mul);
  const ExprPtr f = parse("a^2'", suq2());
  CHECK(f->kind == Expr::Kind::adj);
  CHECK(f->lhs->kind == Expr::Kind::pow);
}

TEST_CASE("syntax errors carry columns") {
  CHECK(error_column("a ^", suq2()) == 3);
  CHECK(error_column("a + ", suq2()) == 5);
  CHECK(error_column("(a b", suq2()) == 5);
  CHECK(error_column("a # b", suq2()) == 3);
  CHECK(error_column("", suq2()) == 1);
  CHECK(error_column("a )", suq2()) == 3);
  CHECK_THROWS_AS(parse("a x", suq2()), UnknownGenerator);
  CHECK_THROWS_WITH(parse("a x", suq2()), doctest::Contains("column 3"));
  CHECK_THROWS_AS(parse("z", suq2()), UnknownGenerator);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(parse_poly("a / b", suq2()), PreconditionError);
  CHECK_THROWS_AS(parse_poly("a / 0", suq2()), PreconditionError);
  CHECK_THROWS_AS(parse_poly("a^-1", suq2()), PreconditionError);
  CHECK_THROWS_AS(parse_poly("S^-1", isometry()), PreconditionError);
  CHECK(parse_poly("v^-1", circle()) == NCPoly::generator(circle(), "v'"));
}

TEST_CASE("pretty then parse is the identity on trees") {
  for (const char* name : {"suq2", "disc", "discext", "isometry", "circle", "sphere"}) {
    const Presentation& p = presentation_by_name(name);
    for (int i = 0; i < 200; ++i) {
      const ExprPtr e = random_tree(p, 6);
      const std::string text = pretty(*e, p);
      INFO(text);
      CHECK(same_tree(*parse(text, p), *e));
    }
  }
}

TEST_CASE("canonical text parses back") {
  for (const char* name : {"suq2", "disc", "discext", "sphere", "circle"}) {
    const Presentation& p = presentation_by_name(name);
    for (int i = 0; i < 100; ++i) {
      const ExprPtr e = random_tree(p, 3);
      NCPoly x(p);
      try {
        x = evaluate(*e, p);
      } catch (const std::exception&) {
        continue;
      }
      INFO(x.to_string());
      CHECK(parse_poly(x.to_string(), p) == x);
    }
  }
}

TEST_CASE("integer literals are unbounded") {
  const Presentation& p = suq2();
  const NCPoly x = parse_poly("123456789012345678901234567890 a", p);
  CHECK(x.to_string() == "123456789012345678901234567890 a");
  CHECK_THROWS_AS(parse("a^1000000", p), SyntaxError);
}
