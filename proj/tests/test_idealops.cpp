#include <doctest.h>

#include "cmlab/errors.hpp"
#include "cmlab/ideal.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace cmlab;

namespace {

IdealPresentation ideal(std::vector<std::string> vars, const std::vector<std::string>& gens,
                        const Field& f = Field::rationals()) {
  return IdealPresentation::parse(std::move(vars), f, gens, "test");
}

std::optional<std::size_t> dim(const IdealPresentation& I, MonomialOrder o = MonomialOrder::grevlex()) {
  return krull_dimension(I, o);
}

}  // namespace

TEST_CASE("presentation: label and ring checks") {
  auto r = make_ring(std::vector<std::string>{"x"}, Field::rationals());
  CHECK_THROWS_AS(IdealPresentation(r, {}, ""), DomainError);
  auto s = make_ring(std::vector<std::string>{"y"}, Field::rationals());
  CHECK_THROWS_AS(IdealPresentation(r, {Polynomial::variable(s, "y")}, "bad"), DomainError);
  const auto I = ideal({"x", "y"}, {"x*y"});
  CHECK(I.relabeled("other").label() == "other");
  CHECK(I.relabeled("other").gens() == I.gens());
}

TEST_CASE("krull_dimension: small cases") {
  CHECK(dim(ideal({"x", "y"}, {})) == 2u);
  CHECK(dim(ideal({"x", "y"}, {"0"})) == 2u);
  CHECK(dim(ideal({"x", "y"}, {"x*y"})) == 1u);
  CHECK(dim(ideal({"x", "y", "z"}, {"x", "y"})) == 1u);
  CHECK(dim(ideal({"x", "y", "z"}, {"x*y", "x*z"})) == 2u);
  CHECK(dim(ideal({"x", "y"}, {"x^2 - y", "x*y - 1"})) == 0u);
  CHECK_FALSE(dim(ideal({"x", "y"}, {"x", "x + 1"})).has_value());
  CHECK_FALSE(dim(ideal({"x"}, {"3"})).has_value());
}

TEST_CASE("independent_set_dimension agrees with subset enumeration") {
  gen::Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + rng() % 9;
    std::vector<Monomial> lms;
    const int count = rng() % 6;
    for (int j = 0; j < count; ++j) {
      auto m = gen::monomial(rng, n, 3);
      if (!m.is_one()) lms.push_back(m);
    }
    std::vector<oracle::Poly> polys;
    for (const auto& m : lms) {
      oracle::Poly p;
      oracle::Exps e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = m[i];
      p.t[e] = 1;
      polys.push_back(p);
    }
    CHECK(independent_set_dimension(lms, n) == static_cast<std::size_t>(*oracle::dimension(oracle::Ord::lex, polys, n)));
  }
}

TEST_CASE("eliminate") {
  // twisted cubic: (t, t^2, t^3)
  const auto I = ideal({"t", "x", "y", "z"}, {"x - t", "y - t^2", "z - t^3"});
  const auto E = eliminate(I, {"t"});
  CHECK(E.vars().names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(dim(E) == 1u);
  const auto G = groebner_basis(E, MonomialOrder::grevlex());
  for (auto s : {"y - x^2", "z - x^3", "x*z - y^2"})
    CHECK(ideal_membership(parse_polynomial(s, G.ring()), G));
  CHECK_FALSE(ideal_membership(parse_polynomial("x", G.ring()), G));
  CHECK_THROWS_AS(eliminate(I, {"w"}), DomainError);
}

TEST_CASE("saturate") {
  // (x*y, x*z) : x^inf = (y, z)
  const auto I = ideal({"x", "y", "z"}, {"x*y", "x*z"});
  const auto S = saturate(I, parse_polynomial("x", I.ring()));
  CHECK(S.vars().names() == I.vars().names());
  const auto G = groebner_basis(S, MonomialOrder::grevlex());
  CHECK(G.size() == 2);
  CHECK(G.generators()[0].to_string() == "y");
  CHECK(G.generators()[1].to_string() == "z");
  // a constant saturates to itself; zero is rejected
  CHECK(saturate(I, Polynomial::constant(I.ring(), Scalar(2))).gens() == I.gens());
  CHECK_THROWS_AS(saturate(I, Polynomial(I.ring())), DomainError);
  // fresh variable skips taken names
  const auto J = ideal({"z1", "x"}, {"z1*x"});
  CHECK(fresh_auxiliary(J.vars()) == "z2");
  CHECK(dim(saturate(J, parse_polynomial("x", J.ring()))) == 1u);
}

TEST_CASE("radical_membership") {
  const auto I = ideal({"x", "y"}, {"x^2", "y^3"});
  CHECK(radical_membership(parse_polynomial("x + y", I.ring()), I));
  CHECK_FALSE(radical_membership(parse_polynomial("x + 1", I.ring()), I));
  const auto J = ideal({"x", "y"}, {"x*y"});
  CHECK_FALSE(radical_membership(parse_polynomial("x", J.ring()), J));
}

TEST_CASE("jacobian") {
  const auto I = ideal({"x", "y", "z"}, {"x^2 + y^2 + z^2 - 1", "x*y"});
  const Point p{{"x", Scalar(1)}, {"y", Scalar(0)}, {"z", Scalar(0)}};
  const auto J = jacobian_matrix(I.gens(), p);
  CHECK(J.rows() == 2);
  CHECK(J.cols() == 3);
  CHECK(J(0, 0) == Scalar(2));
  CHECK(J(1, 1) == Scalar(1));
  CHECK(jacobian_rank(I.gens(), p) == 2);
  const Point origin{{"x", Scalar(0)}, {"y", Scalar(0)}, {"z", Scalar(0)}};
  CHECK(jacobian_rank(I.gens(), origin) == 0);
  CHECK(jacobian_rank(std::vector<Polynomial>{}, origin) == 0);
}

TEST_CASE("property: jacobian rank agrees with the oracle") {
  gen::Rng rng(77);
  for (int k = 0; k < 60; ++k) {
    const Field F = k % 2 ? Field::prime(32003) : Field::rationals();
    auto r = make_ring(std::vector<std::string>{"a", "b", "c", "d"}, F);
    const auto gens = gen::ideal(rng, r, 4, 4, 3);
    Point p;
    std::vector<mpq_class> x;
    for (auto name : {"a", "b", "c", "d"}) {
      const auto v = gen::small_int(rng, -2, 2);
      p.set(name, F.from_int(v));
      x.push_back(mpq_class(static_cast<long>(v)));
    }
    const oracle::Field OF{F.characteristic()};
    std::vector<std::vector<mpq_class>> M;
    for (const auto& g : oracle::from(gens)) {
      std::vector<mpq_class> row;
      for (int v = 0; v < 4; ++v) row.push_back(oracle::eval(OF, oracle::derivative(OF, g, v), x));
      M.push_back(row);
    }
    CHECK(jacobian_rank(gens, p) == static_cast<std::size_t>(oracle::rank(OF, M)));
  }
}
