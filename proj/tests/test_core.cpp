#include <random>

#include "doctest.h"
#include "resint/parse.hpp"
#include "resint/polynomial.hpp"

using namespace resint;

namespace {

Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int terms, int max_exp) {
  TermList t;
  std::vector<int> e(R->nvars());
  for (int i = 0; i < terms; ++i) {
    for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
    t.push_back({R->monomial(e), 0, static_cast<Scalar>(rng() % R->field().characteristic())});
  }
  std::erase_if(t, [](const Term& x) { return x.coef == 0; });
  return Polynomial(R, t);
}

}  // namespace

TEST_CASE("prime field") {
  CHECK_THROWS(PrimeField(100));
  CHECK_THROWS(PrimeField(1));
  PrimeField k(101);
  CHECK(k.reduce(-1) == 100);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar a = 1 + rng() % 100;
    CHECK(k.mul(a, k.inv(a)) == 1);
  }
  PrimeField big(2147483647u);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
}

TEST_CASE("parse") {
  auto R = PolyRing::make(101, {"x1", "x2"});
  auto f = parse_poly("x1^2 + 2*x1*x2", R);
  CHECK(f.size() == 2);
  CHECK(R->format(f.leading().mono) == "x1^2");
  CHECK(parse_poly("101*x1", R).is_zero());
  CHECK(parse_poly("-(x1 - x2)*(x1 + x2)", R) == parse_poly("x2^2 - x1^2", R));

  auto S = PolyRing::make(101, {"x1", "x2", "x3", "x4", "x5", "x6", "x7"});
  auto g = parse_poly("x1*x4*x7^4", S);
  CHECK(g.degree() == 6);
  CHECK(g.is_monomial());

  CHECK_THROWS_AS(parse_poly("x1 x2", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x3", R), ParseError);
  CHECK_THROWS_AS(parse_poly("1.5*x1", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x1^", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 + $", R), ParseError);

  auto m = parse_matrix("[[x1, x2, 0], [0, x1, x2]]", R);
  REQUIRE(m.size() == 2);
  CHECK(m[0].size() == 3);
  CHECK(m[1][0].is_zero());
  CHECK_THROWS_AS(parse_matrix("[[x1, x2], [x1]]", R), ParseError);
}

TEST_CASE("arithmetic") {
  auto R = PolyRing::make(101, {"x", "y"});
  auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  CHECK((x + y) + (x - y) == x.scaled(2));
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x * Polynomial(R)).is_zero());
  auto h = (x * x + x * y) * (y * y);
  CHECK(h.is_homogeneous());
  CHECK(h.degree() == 4);
  auto S = PolyRing::make(101, {"x", "y", "z"}, MonomialOrder::lex());
  CHECK_THROWS(x + Polynomial::variable(S, 0));
}

TEST_CASE("ring axioms on random samples") {
  auto R = PolyRing::make(101, {"a", "b", "c"});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(R, rng, 4, 2), g = random_poly(R, rng, 4, 2), h = random_poly(R, rng, 3, 2);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("print/parse round trip") {
  std::mt19937_64 rng(3);
  for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
    auto R = PolyRing::make(101, {"u", "v", "w1", "w_2"}, order);
    for (int i = 0; i < 100; ++i) {
      auto f = random_poly(R, rng, 6, 3);
      CHECK(parse_poly(f.to_string(), R) == f);
    }
  }
}

TEST_CASE("degrevlex") {
  auto R = PolyRing::make(101, {"x", "y", "z"});
  auto m = [&](int a, int b, int c) {
    std::vector<int> e{a, b, c};
    return R->monomial(e);
  };
  // x^2y vs xz^2: same degree; last differing variable is z where x^2y has the
  // smaller exponent, so x^2y is larger.
  CHECK(R->compare(m(2, 1, 0), m(1, 0, 2)) > 0);
  CHECK(R->compare(m(1, 1, 1), m(1, 1, 1)) == 0);
  CHECK(R->compare(m(0, 0, 3), m(2, 0, 0)) > 0);
  CHECK(R->compare(m(0, 1, 1), m(1, 0, 1)) < 0);
  CHECK(R->compare(m(1, 0, 1), m(0, 2, 0)) < 0);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto a = m(rng() % 4, rng() % 4, rng() % 4), b = m(rng() % 4, rng() % 4, rng() % 4),
         n = m(rng() % 3, rng() % 3, rng() % 3);
    int c = R->compare(a, b);
    CHECK(c == -R->compare(b, a));
    CHECK(R->compare(a * n, b * n) == c);
  }
}

TEST_CASE("weighted grading and elimination order") {
  auto R = PolyRing::make(101, {"t", "x", "y"}, MonomialOrder::elimination(1), {1, 2, 3});
  auto f = parse_poly("x^3 - y^2", R);
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 6);
  auto g = parse_poly("t + x^5", R);
  CHECK(R->format(g.leading().mono) == "t");
  CHECK_THROWS(PolyRing::make(101, {"x", "x"}));
  CHECK_THROWS(PolyRing::make(101, {"x"}, {}, {0}));
}
