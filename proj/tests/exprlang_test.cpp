#include <doctest.h>

#include <array>
#include <random>

#include "lightlike/expr.hpp"
#include "support.hpp"

using namespace lightlike;

namespace {

const CoordinateChart kXY({"x", "y"});
const CoordinateChart kSchw({"t", "r"}, {{"R", 1.0}});

double eval_at(const std::string& src, const CoordinateChart& chart, std::vector<double> point) {
  const Expr e = parse(src, chart);
  const std::vector<double> params = chart.parameter_values();
  return evaluate(e, std::span<const double>(point), params);
}

template <class Fn>
ParseError parse_error(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  throw;
}

}  // namespace

TEST_SUITE("exprlang") {

TEST_CASE("function application parses to a call node") {
  const Expr e = parse("ln(y)", kXY);
  CHECK(e.root().kind == NodeKind::Call);
  CHECK(e.root().fn == Function::Ln);
  CHECK(e.root().lhs->kind == NodeKind::Coordinate);
  CHECK(e.root().lhs->index == 1);
}

TEST_CASE("inverse lapse parses with parameter and coordinate references") {
  const Expr e = parse("1/(1-R/r)", kSchw);
  const Node& n = e.root();
  REQUIRE(n.kind == NodeKind::Div);
  CHECK(n.lhs->kind == NodeKind::Constant);
  CHECK(n.lhs->value == 1.0);
  const Node& den = *n.rhs;
  REQUIRE(den.kind == NodeKind::Sub);
  CHECK(den.lhs->kind == NodeKind::Constant);
  const Node& q = *den.rhs;
  REQUIRE(q.kind == NodeKind::Div);
  CHECK(q.lhs->kind == NodeKind::Parameter);
  CHECK(q.lhs->name == "R");
  CHECK(q.rhs->kind == NodeKind::Coordinate);
  CHECK(q.rhs->name == "r");
  CHECK(render(e) == "1/(1 - R/r)");
}

TEST_CASE("power is right associative") {
  const CoordinateChart c({"x"});
  const Expr e = parse("x^2^3", c);
  REQUIRE(e.root().kind == NodeKind::Pow);
  CHECK(e.root().lhs->kind == NodeKind::Coordinate);
  REQUIRE(e.root().rhs->kind == NodeKind::Pow);
  CHECK(e.root().rhs->lhs->value == 2.0);
  CHECK(e.root().rhs->rhs->value == 3.0);
  CHECK(eval_at("x^2^3", c, {2.0}) == 256.0);
}

TEST_CASE("power binds tighter than unary minus") {
  CHECK(eval_at("-x^2", kXY, {3.0, 0.0}) == -9.0);
  CHECK(eval_at("2^-x", kXY, {1.0, 0.0}) == 0.5);
  CHECK(eval_at("-2*-x", kXY, {1.5, 0.0}) == 3.0);
}

TEST_CASE("named constants") {
  CHECK(eval_at("pi", kXY, {0, 0}) == doctest::Approx(3.141592653589793).epsilon(1e-16));
  CHECK(eval_at("e", kXY, {0, 0}) == doctest::Approx(2.718281828459045).epsilon(1e-16));
}

TEST_CASE("syntax errors carry byte offsets") {
  auto e1 = parse_error([] { parse("2x", kXY); });
  CHECK(e1.kind() == ParseErrorKind::Syntax);
  CHECK(e1.offset() == 1);

  auto e2 = parse_error([] { parse("x + ", kXY); });
  CHECK(e2.kind() == ParseErrorKind::Syntax);
  CHECK(e2.offset() == 4);

  auto e3 = parse_error([] { parse("(x + y", kXY); });
  CHECK(e3.kind() == ParseErrorKind::Syntax);
  CHECK(e3.offset() == 6);

  CHECK_THROWS_AS(parse("", kXY), ParseError);
  CHECK_THROWS_AS(parse("x y", kXY), ParseError);
  CHECK_THROWS_AS(parse("2e", kXY), ParseError);
}

TEST_CASE("unknown identifier, unknown function and arity") {
  auto e1 = parse_error([] { parse("x + z", kXY); });
  CHECK(e1.kind() == ParseErrorKind::UnknownIdentifier);
  CHECK(e1.identifier() == "z");
  CHECK(e1.offset() == 4);

  auto e2 = parse_error([] { parse("foo(x)", kXY); });
  CHECK(e2.kind() == ParseErrorKind::UnknownFunction);
  CHECK(e2.identifier() == "foo");
  CHECK(e2.offset() == 0);

  auto e3 = parse_error([] { parse("sin(x, y)", kXY); });
  CHECK(e3.kind() == ParseErrorKind::ArityMismatch);

  auto e4 = parse_error([] { parse("sqrt()", kXY); });
  CHECK(e4.kind() == ParseErrorKind::ArityMismatch);
}

TEST_CASE("chart validation") {
  CHECK_THROWS_AS(CoordinateChart({"x", "x"}), ParseError);
  CHECK_THROWS_AS(CoordinateChart({"pi"}), ParseError);
  CHECK_THROWS_AS(CoordinateChart({"sin"}), ParseError);
  CHECK_THROWS_AS(CoordinateChart({"x"}, {{"x", 1.0}}), ParseError);
  CHECK_THROWS_AS(CoordinateChart({"2a"}), ParseError);
  const std::array<CoordinateChart::Parameter, 1> over{{{"R", 3.0}}};
  CHECK(kSchw.with_parameters(over).parameter_values() == std::vector<double>{3.0});
  const std::array<CoordinateChart::Parameter, 1> bad{{{"Q", 3.0}}};
  CHECK_THROWS_AS(kSchw.with_parameters(bad), ParseError);
}

TEST_CASE("evaluation examples") {
  CHECK(eval_at("ln(y)", kXY, {0.0, 2.0}) == 0.6931471805599453);
  // 40-digit reference: 2.295587149392638074034298049189490387598
  const double F = eval_at("sqrt(r)*sqrt(r-R) + R*ln(sqrt(r)+sqrt(r-R))", kSchw, {0.0, 2.0});
  CHECK(F == doctest::Approx(2.295587149392638074).epsilon(1e-15));
}

TEST_CASE("domain errors name the failing node") {
  const CoordinateChart c({"x"});
  try {
    eval_at("1/x", c, {0.0});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.node() == "1/x");
  }
  CHECK_THROWS_AS(eval_at("ln(x)", c, {-1.0}), DomainError);
  CHECK_THROWS_AS(eval_at("ln(x)", c, {0.0}), DomainError);
  CHECK_THROWS_AS(eval_at("sqrt(x - 1)", c, {0.5}), DomainError);
  CHECK_THROWS_AS(eval_at("x^0.5", c, {-4.0}), DomainError);
  CHECK(eval_at("x^3", c, {-2.0}) == -8.0);
  CHECK_THROWS_AS(eval_at("exp(x)", c, {1000.0}), DomainError);
}

TEST_CASE("domain constraints") {
  const CoordinateChart c({"x", "y"});
  std::vector<DomainConstraint> cs{parse_constraint("y > 0", c)};
  const std::vector<double> none;
  CHECK(check_domain(cs, std::vector<double>{0.0, 2.0}, none));
  CHECK_FALSE(check_domain(cs, std::vector<double>{0.0, -1.0}, none));

  const std::vector<double> params = kSchw.parameter_values();
  std::vector<DomainConstraint> rs{parse_constraint("r > R", kSchw)};
  CHECK_FALSE(check_domain(rs, std::vector<double>{0.0, 0.5}, params));
  CHECK_FALSE(check_domain(rs, std::vector<double>{0.0, 1.0}, params));
  CHECK(check_domain(rs, std::vector<double>{0.0, 1.0000001}, params));

  std::vector<DomainConstraint> ge{parse_constraint("r >= R", kSchw)};
  CHECK(check_domain(ge, std::vector<double>{0.0, 1.0}, params));
  std::vector<DomainConstraint> ge2{parse_constraint("r ≥ R", kSchw)};
  CHECK(check_domain(ge2, std::vector<double>{0.0, 1.0}, params));

  std::vector<DomainConstraint> bad{parse_constraint("ln(x) > 0", c)};
  const DomainCheck dc = check_domain_detailed(bad, std::vector<double>{-1.0, 0.0}, none);
  CHECK_FALSE(dc.admissible);
  CHECK_FALSE(dc.diagnostic.empty());

  CHECK_THROWS_AS(parse_constraint("x = 0", c), ParseError);
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5, 0.0}) {
    const std::string s = format_number(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("property: render then parse gives the same tree") {
  testsupport::Rng rng(20240611);
  const CoordinateChart c({"x", "y", "z"}, {{"k", 1.5}});
  const std::vector<std::string> names{"x", "y", "z", "k"};
  for (int n = 0; n < 1000; ++n) {
    const std::string src = testsupport::random_syntax_expr(rng, names, 4);
    const Expr a = parse(src, c);
    const std::string text = render(a);
    const Expr b = parse(text, c);
    INFO(src, " -> ", text);
    REQUIRE(a == b);
    REQUIRE(render(b) == text);
  }
}

TEST_CASE("property: multiplication binds tighter than addition") {
  testsupport::Rng rng(7);
  const CoordinateChart c({"a", "b", "c"});
  const Expr e = parse("a+b*c", c);
  const Expr f = parse("a-b/c", c);
  for (int n = 0; n < 1000; ++n) {
    const std::vector<double> p{testsupport::uniform(rng, -10, 10), testsupport::uniform(rng, -10, 10),
                                testsupport::uniform(rng, 0.5, 10)};
    CHECK(evaluate(e, std::span<const double>(p), {}) == p[0] + (p[1] * p[2]));
    CHECK(evaluate(f, std::span<const double>(p), {}) == p[0] - (p[1] / p[2]));
  }
}

}  // TEST_SUITE
