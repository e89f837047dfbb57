#include <filesystem>
#include <random>

#include "doctest.h"
#include "resint/gb_cache.hpp"
#include "resint/ideal.hpp"
#include "resint/parse.hpp"

using namespace resint;

namespace {

std::vector<TermList> terms_of(const std::vector<Polynomial>& v) {
  std::vector<TermList> out;
  for (const auto& f : v) out.push_back(f.terms());
  return out;
}

GBasis gb_of(const RingPtr& R, const std::string& list) {
  return groebner(FreeModule::ideal_ambient(R), terms_of(parse_poly_list(list, R)));
}

std::vector<std::string> printed(const RingPtr& R, const GBasis& g) {
  std::vector<std::string> out;
  for (const auto& e : g.elements) out.push_back(Polynomial::from_sorted(R, e).to_string());
  return out;
}

Polynomial random_form(const RingPtr& R, std::mt19937_64& rng, int d, int terms) {
  auto mons = monomials_of_degree(*R, d);
  Polynomial f(R);
  for (int i = 0; i < terms; ++i)
    f = f + Polynomial::monomial(R, mons[rng() % mons.size()], static_cast<Scalar>(1 + rng() % 100));
  return f;
}

/// Homogeneous membership by linear algebra in one degree: f lies in (gens)
/// iff it is a combination of monomial multiples m*g of that degree.
bool member_by_search(const Polynomial& f, const std::vector<Polynomial>& gens) {
  const RingPtr& R = f.ring();
  int d = f.degree();
  std::vector<TermList> rows;
  for (const auto& g : gens)
    if (g.degree() <= d)
      for (const auto& m : monomials_of_degree(*R, d - g.degree())) rows.push_back(g.times(m).terms());
  LinearSpan span = polynomial_span(R);
  for (auto& r : rows) span.add(r);
  return span.contains(f.terms());
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto R = PolyRing::make(101, {"x", "y"});
  CHECK(printed(R, gb_of(R, "x + y, x - y")) == std::vector<std::string>{"y", "x"});
  CHECK(printed(R, gb_of(R, "x")) == std::vector<std::string>{"x"});
  CHECK(gb_of(R, "0").elements.empty());
  CHECK(gb_of(R, "").elements.empty());

  auto S = PolyRing::make(101, {"x1", "x2", "x3", "y1", "y2", "y3"});
  auto minors = parse_poly_list("x1*y2 - x2*y1, x1*y3 - x3*y1, x2*y3 - x3*y2", S);
  auto g = groebner(FreeModule::ideal_ambient(S), terms_of(minors));
  CHECK(g.elements.size() == 3);
  CHECK(satisfies_buchberger_criterion(g));
  for (const auto& e : g.elements) {
    auto p = Polynomial::from_sorted(S, e);
    bool is_minor = false;
    for (const auto& m : minors) is_minor |= p == m || p == -m;
    CHECK(is_minor);
  }
}

TEST_CASE("normal form and membership") {
  auto R = PolyRing::make(101, {"x", "y", "z"});
  Ideal X(R, {parse_poly("x", R)});
  CHECK(X.reduce(parse_poly("x^2", R)).is_zero());
  CHECK(X.reduce(parse_poly("x*y + z", R)) == parse_poly("z", R));
  CHECK(X.contains(parse_poly("x^2", R)));
  CHECK_FALSE(Ideal(R, {parse_poly("x^2", R)}).contains(parse_poly("x", R)));

  auto S = PolyRing::make(101, {"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"});
  std::vector<Polynomial> minors;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      minors.push_back(Polynomial::variable(S, i) * Polynomial::variable(S, 4 + j) -
                       Polynomial::variable(S, j) * Polynomial::variable(S, 4 + i));
  Ideal I(S, minors);
  for (const auto& m : minors) CHECK(I.contains(m));
}

TEST_CASE("reduced basis invariants and idempotence") {
  std::mt19937_64 rng(17);
  auto R = PolyRing::make(101, {"a", "b", "c", "d"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_form(R, rng, 2 + static_cast<int>(rng() % 2), 3));
    auto F = FreeModule::ideal_ambient(R);
    auto g = groebner(F, terms_of(gens));
    CHECK(satisfies_buchberger_criterion(g));
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
      CHECK(g.elements[i].front().coef == 1);
      for (std::size_t j = 0; j < g.elements.size(); ++j)
        for (const auto& t : g.elements[j])
          if (i != j) CHECK_FALSE(g.elements[i].front().mono.divides(t.mono));
    }
    auto again = groebner(F, g.elements);
    CHECK(same_basis(g, again));
    CHECK(printed(R, g) == printed(R, again));
  }
}

TEST_CASE("membership agrees with degree-by-degree search") {
  std::mt19937_64 rng(23);
  auto R = PolyRing::make(101, {"x", "y", "z"});
  int members = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> gens;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) gens.push_back(random_form(R, rng, 1 + static_cast<int>(rng() % 3), 2));
    Ideal I(R, gens);
    for (int s = 0; s < 4; ++s) {
      Polynomial f(R);
      int d = 3;
      if (s % 2 == 0) {
        // combination of generators, so a member
        for (const auto& g : gens)
          if (g.degree() <= d) f = f + g * random_form(R, rng, d - g.degree(), 2);
      }
      if (f.is_zero()) f = random_form(R, rng, d, 3);
      bool a = I.contains(f), b = member_by_search(f, gens);
      CHECK(a == b);
      members += a;
    }
  }
  CHECK(members > 0);
}

TEST_CASE("membership is order independent") {
  std::mt19937_64 rng(29);
  auto D = PolyRing::make(101, {"x", "y", "z"});
  auto L = D->with_order(MonomialOrder::lex());
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(random_form(D, rng, 2, 3));
    Ideal a(D, gens);
    std::vector<Polynomial> lg;
    for (const auto& g : gens) lg.push_back(g.in_ring(L));
    Ideal b(L, lg);
    for (int s = 0; s < 5; ++s) {
      auto f = s % 2 ? gens[0] * random_form(D, rng, 1, 2) : random_form(D, rng, 3, 3);
      CHECK(a.contains(f) == b.contains(f.in_ring(L)));
    }
  }
}

TEST_CASE("degree-truncated basis") {
  auto R = PolyRing::make(101, {"x", "y", "z"});
  auto gens = terms_of(parse_poly_list("x^2 - y*z, x*y - z^2", R));
  auto F = FreeModule::ideal_ambient(R);
  auto full = groebner(F, gens);
  GBOptions opts;
  opts.degree_limit = 2;
  auto part = groebner(F, gens, opts);
  CHECK(part.truncated);
  CHECK(part.elements.size() <= full.elements.size());
  for (const auto& e : full.elements)
    if (F.degree(e) <= 2) CHECK(normal_form(F, e, part.elements).empty());
}

TEST_CASE("module basis and kernel") {
  auto R = PolyRing::make(101, {"x", "y"});
  FreeModule F(R, {0, 1});
  TermList v{{R->var(0), 0, 1}, {R->one(), 1, 1}};
  F.canonicalize(v);
  auto g = groebner(F, {v});
  CHECK(satisfies_buchberger_criterion(g));
}

TEST_CASE("cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "resint-test-cache";
  std::filesystem::remove_all(dir);
  auto R = PolyRing::make(101, {"x", "y", "z"});
  auto F = FreeModule::ideal_ambient(R);
  auto gens = terms_of(parse_poly_list("x^2 - y*z, x*y - z^2, y^3 - x*z^2", R));
  GBCache cache(dir);
  CHECK(cache.stats().entries == 0);
  auto first = cache.groebner(F, gens);
  CHECK(cache.stats().misses == 1);
  auto second = cache.groebner(F, gens);
  CHECK(cache.stats().hits == 1);
  CHECK(serialize_basis(first) == serialize_basis(second));
  CHECK(cache.stats().entries == 1);

  auto report = cache.verify(10, 1);
  CHECK(report.checked == 1);
  CHECK(report.passed == 1);
  CHECK(report.corrupt.empty());

  // another tool version is ignored, not an error
  auto text = serialize_basis(first);
  auto pos = text.find("version ");
  auto stale = text;
  stale.replace(pos, text.find('\n', pos) - pos, "version 0.0.0");
  CHECK_FALSE(deserialize_basis(stale).has_value());
  CHECK_THROWS(deserialize_basis("not a cache entry"));

  CHECK(cache.clear() == 1);
  CHECK(cache.stats().entries == 0);
  cache.groebner(F, gens);
  CHECK(cache.stats().misses == 2);
  std::filesystem::remove_all(dir);
}
