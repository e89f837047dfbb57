#include "resint/gb.hpp"

#include "resint/budget.hpp"

#include <algorithm>
#include <stdexcept>

namespace resint {

void Reducer::remove(std::size_t index) {
  for (auto& list : by_comp_) {
    auto it = std::find_if(list.begin(), list.end(), [&](const Entry& e) { return e.index == index; });
    if (it != list.end()) {
      list.erase(it);
      return;
    }
  }
}

Reducer make_reducer(const FreeModule& F, const std::vector<TermList>& basis) {
  Reducer r(F.rank());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].empty()) r.add(basis[i].front(), i);
  return r;
}

TermList normal_form(const FreeModule& F, TermList f, const std::vector<TermList>& basis,
                     const Reducer& reducer) {
  TermList rem;
  while (!f.empty()) {
    std::size_t i = 0;
    long r = -1;
    for (; i < f.size(); ++i) {
      r = reducer.find(f[i]);
      if (r >= 0) break;
      rem.push_back(f[i]);
    }
    if (r < 0) break;
    check_deadline();
    const TermList& g = basis[static_cast<std::size_t>(r)];
    Monomial q = f[i].mono / g.front().mono;
    Scalar c = F.field().div(f[i].coef, g.front().coef);
    if (i == 0) {
      f = F.sub_mul(f, c, q, g);
    } else {
      TermList tail(f.begin() + static_cast<long>(i), f.end());
      f = F.sub_mul(tail, c, q, g);
    }
  }
  return rem;
}

TermList normal_form(const FreeModule& F, TermList f, const std::vector<TermList>& basis) {
  return normal_form(F, std::move(f), basis, make_reducer(F, basis));
}

namespace {

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int sugar;
  std::uint64_t id;
};

struct PendingGen {
  TermList v;
  int sugar;
  std::size_t input;
};

int element_degree(const FreeModule& F, const TermList& v) {
  int d = F.degree(v.front());
  for (const auto& t : v) d = std::max(d, F.degree(t));
  return d;
}

}  // namespace

GBasis groebner(const FreeModule& F, std::vector<TermList> gens, const GBOptions& opts) {
  const auto& k = F.field();
  const PolyRing& ring = *F.ring();
  const bool ideal_case = F.rank() == 1;

  GBasis out;
  out.module = F;
  out.degree_limit = opts.degree_limit;

  std::vector<PendingGen> pending;
  for (std::size_t idx = 0; idx < gens.size(); ++idx) {
    TermList v = std::move(gens[idx]);
    if (v.empty()) continue;
    for (const auto& t : v)
      if (t.comp >= F.rank()) throw std::invalid_argument("groebner: component out of range");
    if (!F.is_homogeneous(v)) out.homogeneous = false;
    terms::make_monic(v, k);
    int s = element_degree(F, v);
    pending.push_back({std::move(v), s, idx});
  }
  std::stable_sort(pending.begin(), pending.end(),
                   [](const PendingGen& a, const PendingGen& b) { return a.sugar < b.sugar; });

  std::vector<TermList> G;
  std::vector<int> sugar;
  std::vector<char> active;
  Reducer reducer(F.rank());
  std::vector<Pair> pairs;
  std::uint64_t next_id = 0;

  auto lead_deg = [&](std::size_t i) { return F.degree(G[i].front()); };

  auto update = [&](TermList h, int h_sugar) {
    const std::uint32_t t = static_cast<std::uint32_t>(G.size());
    const Term& lt = h.front();
    struct Cand {
      std::uint32_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (std::uint32_t i = 0; i < G.size(); ++i) {
      if (!active[i] || G[i].front().comp != lt.comp) continue;
      const Monomial& li = G[i].front().mono;
      C.push_back({i, ring.lcm(li, lt.mono), ideal_case && li.coprime(lt.mono)});
    }
    std::vector<Cand> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Cand& c = C[a];
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(c.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(c.lcm)) keep = false;
      }
      if (keep) D.push_back(c);
    }
    // chain criterion on existing pairs
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.comp != lt.comp || !lt.mono.divides(p.lcm)) return false;
      Monomial li = ring.lcm(G[p.i].front().mono, lt.mono);
      Monomial lj = ring.lcm(G[p.j].front().mono, lt.mono);
      return li != p.lcm && lj != p.lcm;
    });
    const int h_lead_deg = F.degree(lt);
    for (const auto& c : D) {
      if (c.coprime) continue;
      int lcm_deg = c.lcm.degree() + F.shift(lt.comp);
      int s = std::max(sugar[c.i] - lead_deg(c.i), h_sugar - h_lead_deg) + lcm_deg;
      pairs.push_back({c.i, t, c.lcm, lt.comp, s, next_id++});
    }
    for (std::uint32_t i = 0; i < G.size(); ++i) {
      if (active[i] && G[i].front().comp == lt.comp && lt.mono.divides(G[i].front().mono)) {
        active[i] = 0;
        reducer.remove(i);
      }
    }
    reducer.add(lt, t);
    G.push_back(std::move(h));
    sugar.push_back(h_sugar);
    active.push_back(1);
  };

  std::size_t next_gen = 0;
  for (;;) {
    check_deadline();
    long best = -1;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (best < 0 || pairs[p].sugar < pairs[static_cast<std::size_t>(best)].sugar ||
          (pairs[p].sugar == pairs[static_cast<std::size_t>(best)].sugar &&
           pairs[p].id < pairs[static_cast<std::size_t>(best)].id))
        best = static_cast<long>(p);
    }
    const bool have_gen = next_gen < pending.size();
    if (best < 0 && !have_gen) break;
    bool take_pair = best >= 0 && (!have_gen || pairs[static_cast<std::size_t>(best)].sugar <= pending[next_gen].sugar);
    int deg = take_pair ? pairs[static_cast<std::size_t>(best)].sugar : pending[next_gen].sugar;
    if (opts.degree_limit >= 0 && deg > opts.degree_limit) {
      out.truncated = true;
      break;
    }
    TermList h;
    int h_sugar;
    bool from_gen = !take_pair;
    std::size_t input = 0;
    if (take_pair) {
      Pair p = pairs[static_cast<std::size_t>(best)];
      pairs.erase(pairs.begin() + best);
      ++out.stats.pairs_considered;
      const TermList& gi = G[p.i];
      const TermList& gj = G[p.j];
      TermList a = terms::mul_monomial(gi, 1, p.lcm / gi.front().mono, k);
      h = F.sub_mul(a, 1, p.lcm / gj.front().mono, gj);
      h_sugar = p.sugar;
      ++out.stats.pairs_reduced;
    } else {
      h = std::move(pending[next_gen].v);
      h_sugar = pending[next_gen].sugar;
      input = pending[next_gen].input;
      ++next_gen;
    }
    h = normal_form(F, std::move(h), G, reducer);
    if (h.empty()) {
      if (take_pair) ++out.stats.zero_reductions;
      continue;
    }
    terms::make_monic(h, k);
    if (from_gen) out.minimal_generators.push_back(input);
    update(std::move(h), h_sugar);
  }

  std::vector<TermList> basis;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (active[i]) basis.push_back(std::move(G[i]));
  std::sort(basis.begin(), basis.end(),
            [&](const TermList& a, const TermList& b) { return F.compare(a.front(), b.front()) < 0; });
  Reducer all = make_reducer(F, basis);
  for (auto& g : basis) {
    TermList tail(g.begin() + 1, g.end());
    TermList reduced = normal_form(F, std::move(tail), basis, all);
    TermList full;
    full.reserve(reduced.size() + 1);
    full.push_back(g.front());
    full.insert(full.end(), reduced.begin(), reduced.end());
    g = std::move(full);
  }
  std::sort(out.minimal_generators.begin(), out.minimal_generators.end());
  out.elements = std::move(basis);
  return out;
}

bool satisfies_buchberger_criterion(const GBasis& gb) {
  const FreeModule& F = gb.module;
  const auto& G = gb.elements;
  Reducer red = make_reducer(F, G);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].front().coef != 1) return false;
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (G[i].front().comp != G[j].front().comp) continue;
      Monomial L = F.ring()->lcm(G[i].front().mono, G[j].front().mono);
      if (gb.degree_limit >= 0 && L.degree() + F.shift(G[i].front().comp) > gb.degree_limit) continue;
      TermList a = terms::mul_monomial(G[i], 1, L / G[i].front().mono, F.field());
      TermList s = F.sub_mul(a, 1, L / G[j].front().mono, G[j]);
      if (!normal_form(F, std::move(s), G, red).empty()) return false;
    }
  }
  return true;
}

bool same_basis(const GBasis& a, const GBasis& b) {
  if (a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    const auto& x = a.elements[i];
    const auto& y = b.elements[i];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].mono != y[t].mono || x[t].comp != y[t].comp || x[t].coef != y[t].coef) return false;
  }
  return true;
}

}  // namespace resint
