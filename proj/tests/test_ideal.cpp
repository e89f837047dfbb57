#include <algorithm>
#include <random>

#include "doctest.h"
#include "resint/ideal.hpp"
#include "resint/parse.hpp"

using namespace resint;

namespace {

Ideal ideal(const RingPtr& R, const std::string& gens) { return Ideal(R, parse_poly_list(gens, R)); }

using Exps = std::vector<int>;

Exps exps_of(const Polynomial& f) {
  Exps e(f.ring()->nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.leading().mono.exp(i);
  return e;
}

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool in_monomial_ideal(const Exps& m, const std::vector<Exps>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); });
}

/// a : b for monomial ideals, elementwise: (a : m) = (g / gcd(g, m)), then
/// intersect over the generators m of b via pairwise lcms.
std::vector<Exps> monomial_colon_oracle(const std::vector<Exps>& a, const std::vector<Exps>& b) {
  std::vector<Exps> result;
  bool first = true;
  for (const auto& m : b) {
    std::vector<Exps> q;
    for (const auto& g : a) {
      Exps e(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) e[i] = std::max(0, g[i] - m[i]);
      q.push_back(e);
    }
    if (first) {
      result = q;
      first = false;
      continue;
    }
    std::vector<Exps> meet;
    for (const auto& x : result)
      for (const auto& y : q) {
        Exps e(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) e[i] = std::max(x[i], y[i]);
        meet.push_back(e);
      }
    result = meet;
  }
  return result;
}

Polynomial from_exps(const RingPtr& R, const Exps& e) { return Polynomial::monomial(R, R->monomial(e)); }

std::vector<Exps> random_monomials(std::mt19937_64& rng, std::size_t n, int count, int max_exp) {
  std::vector<Exps> out;
  for (int i = 0; i < count; ++i) {
    Exps e(n);
    for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[rng() % n] = 1;
    out.push_back(e);
  }
  return out;
}

/// Determinant by Laplace expansion along the first row.
Polynomial det(const std::vector<std::vector<Polynomial>>& m, const RingPtr& R) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial out(R);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Polynomial term = m[0][c] * det(minor, R);
    out = c % 2 ? out - term : out + term;
  }
  return out;
}

Polynomial random_form(const RingPtr& R, std::mt19937_64& rng, int d, int terms) {
  auto mons = monomials_of_degree(*R, d);
  Polynomial f(R);
  for (int i = 0; i < terms; ++i)
    f = f + Polynomial::monomial(R, mons[rng() % mons.size()], static_cast<Scalar>(1 + rng() % 100));
  return f;
}

}  // namespace

TEST_CASE("sum, product, intersection") {
  auto R = PolyRing::make(101, {"x", "y", "z"});
  auto x = ideal(R, "x"), y = ideal(R, "y");
  CHECK(ideal_intersect(x, y).same_as(ideal(R, "x*y")));
  CHECK(ideal_product(x, y).same_as(ideal(R, "x*y")));
  CHECK(ideal_sum(x, y).same_as(ideal(R, "x, y")));
  CHECK(ideal_intersect(ideal(R, "x^2, y"), ideal(R, "x, y^3")).same_as(ideal(R, "x^2, x*y, y^3")));
  auto S = PolyRing::make(101, {"a"});
  CHECK_THROWS(ideal_sum(x, Ideal(S, {})));
  CHECK_THROWS(ideal_sum(x, Ideal(R, {}, {parse_poly("z", R)})));
}

TEST_CASE("powers") {
  auto R = PolyRing::make(101, {"x", "y"});
  CHECK(ideal_power(ideal(R, "x, y"), 0).is_unit());
  auto sq = ideal_power(ideal(R, "x, y"), 2);
  CHECK(sq.size() == 3);
  CHECK(sq.same_as(ideal(R, "x^2, x*y, y^2")));
  auto I = ideal(R, "x, y, x + y");
  CHECK(ideal_power(I, 3).same_as(ideal_power(ideal(R, "x, y"), 3)));
}

TEST_CASE("colon examples") {
  auto R = PolyRing::make(101, {"x", "y", "z"});
  CHECK(colon(ideal(R, "x^2*y, x*z"), ideal(R, "x")).same_as(ideal(R, "x*y, z")));
  auto a = ideal(R, "x^2 - y*z, x*y");
  CHECK(colon(a, a).is_unit());
  CHECK_THROWS(colon(a, Ideal(R, {})));
  // in k[x,y,z]/(x*y): 0 : y = (x)
  Ideal zero = Ideal::zero(R, {parse_poly("x*y", R)});
  Ideal c = colon(zero, zero.with_generators({parse_poly("y", R)}));
  CHECK(c.same_as(zero.with_generators({parse_poly("x", R)})));
}

TEST_CASE("colon agrees with the monomial oracle") {
  std::mt19937_64 rng(101);
  int agreements = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 2 + rng() % 3;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    auto R = PolyRing::make(101, names);
    auto ga = random_monomials(rng, n, 1 + static_cast<int>(rng() % 4), 3);
    auto gb = random_monomials(rng, n, 1 + static_cast<int>(rng() % 2), 2);
    std::vector<Polynomial> pa, pb;
    for (auto& e : ga) pa.push_back(from_exps(R, e));
    for (auto& e : gb) pb.push_back(from_exps(R, e));
    Ideal a(R, pa), b(R, pb);
    Ideal c = colon(a, b);
    auto oracle = monomial_colon_oracle(ga, gb);
    bool ok = true;
    for (const auto& e : oracle) ok &= c.contains(from_exps(R, e));
    for (const auto& f : c.gb().elements) {
      auto p = Polynomial::from_sorted(R, f);
      ok &= p.is_monomial() && in_monomial_ideal(exps_of(p), oracle);
    }
    CHECK(ok);
    agreements += ok;
  }
  CHECK(agreements == 500);
}

TEST_CASE("colon properties on random ideals") {
  std::mt19937_64 rng(7);
  auto R = PolyRing::make(101, {"x", "y", "z", "w"});
  for (int trial = 0; trial < 25; ++trial) {
    Ideal a(R, {random_form(R, rng, 2, 3), random_form(R, rng, 2, 2), random_form(R, rng, 3, 2)});
    Ideal b(R, {random_form(R, rng, 1, 2), random_form(R, rng, 1, 2)});
    Ideal c = colon(a, b);
    CHECK(a.contains(ideal_product(c, b)));
    CHECK(c.contains(a));
    // antitone in b, monotone in a
    Ideal b2 = ideal_sum(b, Ideal(R, {random_form(R, rng, 1, 2)}));
    CHECK(c.contains(colon(a, b2)));
    Ideal a2 = ideal_sum(a, Ideal(R, {random_form(R, rng, 2, 2)}));
    CHECK(colon(a2, b).contains(c));
  }
}

TEST_CASE("saturation") {
  auto R = PolyRing::make(101, {"x", "y", "z"});
  auto s = saturate(ideal(R, "x^2*y"), ideal(R, "x"));
  CHECK(s.ideal.same_as(ideal(R, "y")));
  CHECK(s.exponent == 2);
  auto t = saturate(ideal(R, "x, y"), ideal(R, "z"));
  CHECK(t.ideal.same_as(ideal(R, "x, y")));
  CHECK(t.exponent == 0);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    Ideal a(R, {random_form(R, rng, 3, 2) * random_form(R, rng, 1, 1), random_form(R, rng, 3, 3)});
    Ideal b(R, {random_form(R, rng, 1, 2)});
    auto sat = saturate(a, b);
    // the colon a : b^e is reached at e and not before
    Ideal be = ideal_power(b, static_cast<unsigned>(sat.exponent));
    CHECK(colon(a, be).same_as(sat.ideal));
    CHECK(colon(a, ideal_power(b, sat.exponent + 1)).same_as(sat.ideal));
    if (sat.exponent > 0) CHECK_FALSE(colon(a, ideal_power(b, sat.exponent - 1)).same_as(sat.ideal));
  }
}

TEST_CASE("elimination") {
  auto R = PolyRing::make(101, {"t", "x", "y"});
  auto a = ideal(R, "x - t^2, y - t^3");
  auto e = eliminate(a, {1, 2});
  // resultant in t through the Sylvester matrix of -t^2 + x and -t^3 + y
  auto P = [&](const char* s) { return parse_poly(s, R); };
  auto z = Polynomial(R);
  std::vector<std::vector<Polynomial>> syl{
      {P("-1"), z, P("x"), z, z}, {z, P("-1"), z, P("x"), z}, {z, z, P("-1"), z, P("x")},
      {P("-1"), z, z, P("y"), z}, {z, P("-1"), z, z, P("y")}};
  auto res = det(syl, R);
  CHECK(res.degree() == 3);
  REQUIRE(e.size() == 1);
  CHECK(e.same_as(Ideal(R, {res})));
  CHECK(e.same_as(ideal(R, "x^3 - y^2")));

  CHECK(eliminate(a, {0, 1, 2}).same_as(a));
  CHECK(eliminate(ideal(R, "x"), {}).is_zero());
  CHECK(eliminate(ideal(R, "x, x + 1"), {}).is_unit());
}

TEST_CASE("hilbert invariants") {
  auto R = PolyRing::make(101, {"x", "y", "z"});
  auto h = hilbert_invariants(ideal(R, "x, y"));
  CHECK(h.dimension == 1);
  CHECK(h.degree == 1);
  CHECK(hilbert_invariants(ideal(R, "x^2*y + z^3")).degree == 3);
  CHECK(dimension(Ideal::unit(R)) == -1);
  CHECK(hilbert_invariants(Ideal(R, {})).dimension == 3);

  for (int n = 3; n <= 5; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i));
    auto S = PolyRing::make(101, names);
    std::vector<Polynomial> minors;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        minors.push_back(Polynomial::variable(S, i) * Polynomial::variable(S, n + j) -
                         Polynomial::variable(S, j) * Polynomial::variable(S, n + i));
    Ideal I(S, minors);
    CHECK(codimension(I) == n - 1);
    // the rational normal scroll of the 2 x n generic matrix has degree n
    CHECK(degree(I) == n);
  }

  std::mt19937_64 rng(19);
  auto T = PolyRing::make(101, {"a", "b", "c", "d"});
  for (int trial = 0; trial < 10; ++trial) {
    Ideal a(T, {random_form(T, rng, 2, 3), random_form(T, rng, 2, 2)});
    Ideal b(T, {random_form(T, rng, 1, 2), random_form(T, rng, 2, 3), random_form(T, rng, 2, 1)});
    CHECK(dimension(ideal_intersect(a, b)) == std::max(dimension(a), dimension(b)));
  }
}

TEST_CASE("irreducible decomposition") {
  auto R = PolyRing::make(101, {"x", "y", "z"});
  auto d1 = monomial_irreducible_decomposition(ideal(R, "x^2, x*y"));
  REQUIRE(d1.size() == 2);
  std::vector<std::string> s1{d1[0].to_string(), d1[1].to_string()};
  std::sort(s1.begin(), s1.end());
  CHECK(s1 == std::vector<std::string>{"(x)", "(x^2, y)"});
  CHECK_FALSE(is_unmixed_monomial(ideal(R, "x^2, x*y")));

  auto a = ideal(R, "x*y, x*z, y*z");
  auto d2 = monomial_irreducible_decomposition(a);
  CHECK(d2.size() == 3);
  for (const auto& c : d2) CHECK(c.size() == 2);
  CHECK(is_unmixed_monomial(a));
  // both inclusions by membership
  Ideal meet = d2[0];
  for (std::size_t i = 1; i < d2.size(); ++i) meet = ideal_intersect(meet, d2[i]);
  CHECK(meet.same_as(a));

  CHECK_THROWS(monomial_irreducible_decomposition(ideal(R, "x + y")));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = random_monomials(rng, 3, 2 + static_cast<int>(rng() % 3), 3);
    std::vector<Polynomial> p;
    for (auto& e : gens) p.push_back(from_exps(R, e));
    Ideal I(R, p);
    auto comps = monomial_irreducible_decomposition(I);
    Ideal m = comps[0];
    for (std::size_t i = 1; i < comps.size(); ++i) m = ideal_intersect(m, comps[i]);
    CHECK(m.same_as(I));
    // irredundant: dropping any component enlarges the intersection
    for (std::size_t skip = 0; skip < comps.size() && comps.size() > 1; ++skip) {
      Ideal rest = Ideal::unit(R);
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (i != skip) rest = ideal_intersect(rest, comps[i]);
      CHECK_FALSE(rest.same_as(I));
    }
  }
}

TEST_CASE("truncation and minimal generators") {
  auto R = PolyRing::make(101, {"x", "y"});
  auto t = truncate_ideal(ideal(R, "x"), 2);
  CHECK(t.size() == 2);
  CHECK(t.same_as(ideal(R, "x^2, x*y")));
  auto I = ideal(R, "x^2, x*y, y^2");
  CHECK(truncate_ideal(I, 2).same_as(I));
  CHECK(truncate_ideal(I, 2).size() == 3);
  CHECK_THROWS(truncate_ideal(I, 1));
  CHECK(ideal(R, "x, y, x + y, x^2").minimalized().size() == 2);
}
