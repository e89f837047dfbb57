#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "resint/field.hpp"
#include "resint/monomial.hpp"

namespace resint {

/// One term of an element of a free module: coefficient * monomial * e_comp.
/// Polynomials are the rank-one case with comp == 0.
struct Term {
  Monomial mono;
  std::uint32_t comp = 0;
  Scalar coef = 0;
};

/// Terms sorted strictly descending under some term order, no zero coefficients.
using TermList = std::vector<Term>;

namespace terms {

/// f - c * m * g, both inputs sorted descending under `cmp`.
template <class Cmp>
TermList sub_mul(const TermList& f, Scalar c, const Monomial& m, const TermList& g, const PrimeField& k,
                 Cmp&& cmp) {
  TermList out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  Term shifted;
  while (i < f.size() || j < g.size()) {
    if (j < g.size()) {
      shifted.mono = m * g[j].mono;
      shifted.comp = g[j].comp;
    }
    int r = i == f.size() ? -1 : j == g.size() ? 1 : cmp(f[i], shifted);
    if (r > 0) {
      out.push_back(f[i++]);
    } else if (r < 0) {
      shifted.coef = k.neg(k.mul(c, g[j].coef));
      out.push_back(shifted);
      ++j;
    } else {
      Scalar v = k.sub(f[i].coef, k.mul(c, g[j].coef));
      if (v) {
        shifted.coef = v;
        out.push_back(shifted);
      }
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Cmp>
TermList add(const TermList& f, const TermList& g, const PrimeField& k, Cmp&& cmp) {
  TermList out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    int r = i == f.size() ? -1 : j == g.size() ? 1 : cmp(f[i], g[j]);
    if (r > 0) {
      out.push_back(f[i++]);
    } else if (r < 0) {
      out.push_back(g[j++]);
    } else {
      Scalar v = k.add(f[i].coef, g[j].coef);
      if (v) out.push_back({f[i].mono, f[i].comp, v});
      ++i;
      ++j;
    }
  }
  return out;
}

inline void scale(TermList& f, Scalar c, const PrimeField& k) {
  if (c == 0) {
    f.clear();
    return;
  }
  for (auto& t : f) t.coef = k.mul(t.coef, c);
}

inline TermList mul_monomial(const TermList& f, Scalar c, const Monomial& m, const PrimeField& k) {
  TermList out;
  if (c == 0) return out;
  out.reserve(f.size());
  for (const auto& t : f) out.push_back({m * t.mono, t.comp, k.mul(c, t.coef)});
  return out;
}

inline void make_monic(TermList& f, const PrimeField& k) {
  if (f.empty() || f.front().coef == 1) return;
  scale(f, k.inv(f.front().coef), k);
}

/// Sort descending and merge duplicate terms, dropping zeros.
template <class Cmp>
void canonicalize(TermList& f, const PrimeField& k, Cmp&& cmp) {
  std::sort(f.begin(), f.end(), [&](const Term& a, const Term& b) { return cmp(a, b) > 0; });
  TermList out;
  out.reserve(f.size());
  for (auto& t : f) {
    if (!out.empty() && cmp(out.back(), t) == 0) {
      out.back().coef = k.add(out.back().coef, t.coef);
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef) {
      out.push_back(t);
    }
  }
  f = std::move(out);
}

}  // namespace terms
}  // namespace resint
