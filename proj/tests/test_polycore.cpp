#include <doctest.h>

#include "cmlab/errors.hpp"
#include "cmlab/polynomial.hpp"
#include "gen.hpp"

using namespace cmlab;

namespace {

RingPtr ring_xyz(const Field& f = Field::rationals(), MonomialOrder o = MonomialOrder::grevlex()) {
  return make_ring(std::vector<std::string>{"x", "y", "z"}, f, o);
}

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("field: prime arithmetic and parsing") {
  const Field F = Field::prime(7);
  CHECK((F.from_int(3) * F.from_int(5)) == F.from_int(1));
  CHECK(F.from_int(3).inverse() == F.from_int(5));
  CHECK(F.from_int(-1) == F.from_int(6));
  CHECK(F.from_int(4).to_string() == "-3");
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::parse("fp:32003").characteristic() == 32003u);
  CHECK_THROWS_AS(Field::parse("fp:32004"), DomainError);
  CHECK_THROWS_AS(Field::parse("fp:2"), DomainError);
  CHECK_THROWS_AS(Field::parse("real"), DomainError);
  CHECK_THROWS_AS(F.from_int(0).inverse(), DomainError);
  CHECK_THROWS_AS(F.from_rational(mpq_class(1, 7)), DomainError);
}

TEST_CASE("variables: names are validated") {
  CHECK_THROWS_AS(make_ring(std::vector<std::string>{"x", "x"}, Field::rationals()), DomainError);
  CHECK_THROWS_AS(make_ring(std::vector<std::string>{"1x"}, Field::rationals()), DomainError);
  CHECK_NOTHROW(make_ring(std::vector<std::string>{"x_1", "vp3"}, Field::rationals()));
}

TEST_CASE("print: canonical text") {
  auto r = make_ring(std::vector<std::string>{"x11", "x12", "y11", "y12"}, Field::rationals());
  CHECK(P("x12*y11 - x11*y12", r).to_string() == "x12*y11 - x11*y12");
  CHECK(P("3/2*x11", r).to_string() == "3/2*x11");
  CHECK(P("-x11", r).to_string() == "-x11");
  CHECK(P("0", r).to_string() == "0");
  CHECK(P("2 - 2", r).is_zero());
  CHECK(P("(x11 + 1)^2", r).to_string() == "x11^2 + 2*x11 + 1");
}

TEST_CASE("parse: errors carry a 1-based column") {
  auto r = ring_xyz();
  auto col = [&](const std::string& s) -> std::size_t {
    try {
      P(s, r);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(col("x + ") == 5);
  CHECK(col("x + w") == 5);
  CHECK(col("x y") == 3);
  CHECK(col("x^2^3") == 4);
  CHECK(col("(x + y") == 7);
  CHECK(col("x / 0") == 5);
  CHECK(col("x $ y") == 3);
  CHECK_THROWS_AS(P("x/y", r), ParseError);
  CHECK(P("x/2", r) == P("1/2*x", r));
}

TEST_CASE("parse: prime field reduces literals") {
  auto r = ring_xyz(Field::prime(7));
  CHECK(P("8*x", r) == P("x", r));
  CHECK(P("7*x + y", r) == P("y", r));
  CHECK(P("x/3", r) == P("5*x", r));
  CHECK_THROWS_AS(P("x/7", r), ParseError);
}

TEST_CASE("orders: lex and grevlex leading terms") {
  auto lex = ring_xyz(Field::rationals(), MonomialOrder::lex());
  auto grl = ring_xyz();
  CHECK(P("x + y^5", lex).leading_monomial() == P("x", lex).leading_monomial());
  CHECK(P("x + y^5", grl).leading_monomial() == P("y^5", grl).leading_monomial());
  // grevlex: x*z^2 < y^3? both degree 3; last variable z has larger exponent in x*z^2, so it is smaller
  CHECK(P("x*z^2 + y^3", grl).to_string() == "y^3 + x*z^2");
  CHECK(P("x*z^2 + y^3", lex).to_string() == "x*z^2 + y^3");
  const auto block = MonomialOrder::block({2}, MonomialOrder::Kind::grevlex, 3);
  auto blk = ring_xyz(Field::rationals(), block);
  CHECK(P("x^3 + z", blk).to_string() == "z + x^3");
}

TEST_CASE("arithmetic: ring axioms on random polynomials") {
  gen::Rng rng(11);
  for (const Field& F : {Field::rationals(), Field::prime(32003), Field::prime(5)}) {
    auto r = ring_xyz(F);
    for (int k = 0; k < 60; ++k) {
      const auto f = gen::polynomial(rng, r), g = gen::polynomial(rng, r), h = gen::polynomial(rng, r);
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f - f).is_zero());
      CHECK(parse_polynomial(f.to_string(), r) == f);
      if (!f.is_zero() && !g.is_zero()) CHECK((f * g).total_degree() == f.total_degree() + g.total_degree());
    }
  }
}

TEST_CASE("derivative and evaluation") {
  auto r = ring_xyz();
  const auto f = P("x^3*y - 2*x*z + 5", r);
  CHECK(partial_derivative(f, "x") == P("3*x^2*y - 2*z", r));
  CHECK(partial_derivative(f, "y") == P("x^3", r));
  CHECK(partial_derivative(P("7", r), "z").is_zero());
  const Point p{{"x", Scalar(2)}, {"y", Scalar(3)}, {"z", Scalar(mpq_class(1, 2))}};
  CHECK(evaluate(f, p) == Scalar(24 - 2 + 5));
  CHECK_THROWS_AS(evaluate(f, Point{{"x", Scalar(1)}}), DomainError);

  // Leibniz rule on random input
  gen::Rng rng(5);
  for (int k = 0; k < 40; ++k) {
    const auto a = gen::polynomial(rng, r), b = gen::polynomial(rng, r);
    CHECK(partial_derivative(a * b, "y") == partial_derivative(a, "y") * b + a * partial_derivative(b, "y"));
  }
}

TEST_CASE("substitute and change_ring") {
  auto r = ring_xyz();
  auto t = make_ring(std::vector<std::string>{"s", "t"}, Field::rationals());
  const std::vector<Polynomial> images{P("s + t", t), P("s", t), Polynomial(t)};
  CHECK(substitute(P("x^2 - y*x + z", r), images, t) == P("s*t + t^2", t));
  auto wide = make_ring(std::vector<std::string>{"w", "x", "y", "z"}, Field::rationals());
  CHECK(change_ring(P("x*y", r), wide).to_string() == "x*y");
  CHECK_THROWS_AS(change_ring(P("x*z", r), t), DomainError);
}

TEST_CASE("mixing rings is rejected") {
  auto r = ring_xyz();
  auto s = ring_xyz(Field::prime(7));
  CHECK_THROWS_AS(P("x", r) + P("x", s), DomainError);
}
