#include <doctest.h>

#include <random>

#include "whittaker/algebra.hpp"

using namespace whit;

namespace {

LaurentPoly t_poly(std::initializer_list<int> coefs) {
  LaurentPoly p;
  int e = 0;
  for (int c : coefs) p += LaurentPoly::term(c, e++, {});
  return p;
}

LaurentPoly random_poly(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 3), count(0, 5);
  LaurentPoly p(rank);
  for (int k = count(rng); k > 0; --k) {
    std::vector<int> x(rank);
    for (int& v : x) v = ex(rng);
    p += LaurentPoly::term(coef(rng), ex(rng), x);
  }
  return p;
}

}  // namespace

TEST_CASE("addition cancels and collects") {
  auto one_minus_t = LaurentPoly::power(Base::OneMinusT, 1);
  auto t_minus_one = LaurentPoly::power(Base::TMinusOne, 1);
  CHECK((one_minus_t + t_minus_one).is_zero());
  CHECK(t_poly({0, 1}) + t_poly({0, 1}) == t_poly({0, 2}));
  auto lhs = LaurentPoly::power(Base::OneMinusT, 2) + t_poly({0, 1}) * one_minus_t;
  CHECK(lhs == one_minus_t);
}

TEST_CASE("multiplication") {
  auto s = LaurentPoly::power(Base::TMinusOne, 1);
  CHECK(s * s == t_poly({1, -2, 1}));
  CHECK(LaurentPoly::term(1, 0, {1}) * LaurentPoly::term(1, 0, {-1}) == LaurentPoly::constant(1, 1));
  CHECK(LaurentPoly::power(Base::OneMinusT, 1) * LaurentPoly::power(Base::NegT, 1) == t_poly({0, -1, 1}));
}

TEST_CASE("term construction drops zero coefficients") {
  CHECK(LaurentPoly::term(1, 0, {0, 0, 0}) == LaurentPoly::constant(1, 3));
  CHECK(LaurentPoly::term(0, 5, {1, 2, 3}).is_zero());
  CHECK(LaurentPoly::term(-1, 3, {2, 1, 0}).str() == "-t^3*x1^2*x2");
}

TEST_CASE("powers") {
  CHECK(LaurentPoly::power(Base::OneMinusT, 0) == LaurentPoly::constant(1));
  CHECK(LaurentPoly::power(Base::OneMinusT, 2) == t_poly({1, -2, 1}));
  CHECK(LaurentPoly::power(Base::NegT, 3) == t_poly({0, 0, 0, -1}));
  CHECK_THROWS(LaurentPoly::power(Base::NegT, -1));
}

TEST_CASE("evaluation") {
  CHECK(LaurentPoly::power(Base::OneMinusT, 1).eval(1, {}) == 0);
  CHECK(LaurentPoly::term(1, 0, {1, 1}).eval(5, {2, 3}) == 6);
  CHECK(LaurentPoly::power(Base::OneMinusT, 2).eval(3, {}) == 4);
  CHECK(LaurentPoly::term(1, 0, {-2}).eval(0, {Rational(1, 2)}) == 4);
  CHECK_THROWS_AS(LaurentPoly::term(1, -1, {}).eval(0, {}), std::domain_error);
}

TEST_CASE("json encoding") {
  CHECK(LaurentPoly(3).dump() == R"({"rank":3,"terms":[]})");
  auto p = LaurentPoly::term(-1, 3, {2, 0, 0});
  CHECK(p.to_json()["terms"][0]["coef"] == -1);
  CHECK(p.to_json()["terms"][0]["t"] == 3);
  CHECK(p.to_json()["terms"][0]["x"] == nlohmann::json({2, 0, 0}));
  CHECK_THROWS_AS(LaurentPoly::parse("{"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse(R"({"rank":1,"terms":[{"coef":1,"t":0,"x":[1,2]}]})"), std::invalid_argument);
}

TEST_CASE("big coefficients survive the round trip") {
  LaurentPoly p = LaurentPoly::power(Base::OneMinusT, 80);
  CHECK(LaurentPoly::parse(p.dump()) == p);
}

TEST_CASE("rank mismatch is an error") {
  CHECK_THROWS_AS(LaurentPoly(2) + LaurentPoly(3), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::term(1, 0, {1}).times_monomial({1, 2}), std::invalid_argument);
}

TEST_CASE("binomial form recognition") {
  auto p = LaurentPoly::signed_t_binomial(-1, 3, 2);
  auto f = as_binomial_form(p);
  REQUIRE(f);
  CHECK(f->sign == -1);
  CHECK(f->t_exp == 3);
  CHECK(f->one_minus_t_exp == 2);
  CHECK(format_binomial_form(p) == "-t^3*(1-t)^2");
  CHECK(format_binomial_form(LaurentPoly()) == "0");
  CHECK(format_binomial_form(LaurentPoly::constant(1)) == "1");
  CHECK(format_binomial_form(LaurentPoly::constant(2)) == "2");
}

TEST_CASE("property: ring laws, evaluation homomorphism, serialization") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int rank = trial % 4;
    auto a = random_poly(rng, rank), b = random_poly(rng, rank), c = random_poly(rng, rank);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(LaurentPoly::parse(a.dump()) == a);
    CHECK(LaurentPoly::from_json(nlohmann::json::parse(a.dump())).dump() == a.dump());
    for (const auto& [e, coef] : a.terms()) CHECK(coef != 0);

    Rational t0(small(rng) == 0 ? 2 : small(rng) * 2 + 1, 3);
    std::vector<Rational> x0;
    for (int i = 0; i < rank; ++i) x0.emplace_back(small(rng) * 2 + 1, 2);
    CHECK((a * b).eval(t0, x0) == a.eval(t0, x0) * b.eval(t0, x0));
    CHECK((a + b).eval(t0, x0) == a.eval(t0, x0) + b.eval(t0, x0));
  }
}
