#include "resint/homology.hpp"

#include <random>
#include <stdexcept>
#include <unordered_map>

#include "resint/kernel.hpp"

namespace resint {

namespace {

// Columns of d^T : F_i^* -> F_{i+1}^*, given the columns of d : F_{i+1} -> F_i.
std::vector<TermList> transpose(const std::vector<TermList>& cols, std::size_t rows, const FreeModule& dual_target) {
  std::vector<TermList> out(rows);
  for (std::uint32_t c = 0; c < cols.size(); ++c)
    for (const auto& t : cols[c]) out[t.comp].push_back({t.mono, c, t.coef});
  for (auto& v : out) dual_target.canonicalize(v);
  return out;
}

std::vector<int> negated(const std::vector<int>& d) {
  std::vector<int> out;
  for (int x : d) out.push_back(-x);
  return out;
}

// Basis of { x : M x = 0 } for a dense matrix over F_p.
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> m, std::size_t cols, const PrimeField& k) {
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Scalar inv = k.inv(m[r][c]);
    for (auto& x : m[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || !m[i][c]) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j]) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    pivot_of_col[c] = static_cast<long>(r++);
  }
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<Scalar> v(cols, 0);
    v[f] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = k.neg(m[pivot_of_col[c]][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

GradedModule zero_module(const RingPtr& ring) { return GradedModule{ring, {}, {}, {}}; }

}  // namespace

GradedModule ext_module(const FreeResolution& res, int i) {
  if (i < 0) throw std::invalid_argument("ext_module: negative index");
  const RingPtr& ring = res.ring;
  if (i > res.length()) return zero_module(ring);
  const std::vector<int> Di = negated(res.degrees[i]);
  FreeModule Fi(ring, Di);

  std::vector<TermList> boundaries;
  if (i >= 1) boundaries = transpose(res.maps[i - 1], res.rank(i - 1), Fi);

  GradedModule out{ring, {}, {}, {}};
  if (static_cast<std::size_t>(i + 1) < res.degrees.size() && res.rank(i + 1) > 0) {
    FreeModule next(ring, negated(res.degrees[i + 1]));
    std::vector<TermList> z = syzygy(next, transpose(res.maps[i], res.rank(i), next), Di);
    if (z.empty()) return zero_module(ring);
    for (const auto& v : z) out.degrees.push_back(Fi.degree(v));
    out.relations = kernel(Fi, z, boundaries, out.free());
  } else {
    out.degrees = Di;
    out.relations = std::move(boundaries);
  }
  return minimal_presentation(out);
}

GradedModule ext_module(const GradedModule& M, int i) {
  if (i < 0) throw std::invalid_argument("ext_module: negative index");
  // F_{i+1} -> F_i is the last map needed
  ResolutionOptions opts;
  opts.max_length = i + 1;
  return ext_module(minimal_free_resolution(M, opts), i);
}

GradedModule canonical_module(const Ideal& K) {
  const RingPtr& ring = K.ring();
  Ideal folded = K.folded();
  if (folded.is_unit()) throw std::invalid_argument("canonical_module: unit ideal");
  const int c = codimension(folded);
  GradedModule omega = ext_module(GradedModule::quotient(folded), c).shifted(-static_cast<int>(ring->nvars()));
  omega.ambient = folded.generators();
  return omega;
}

HomModule hom_module(const GradedModule& M, const GradedModule& N) {
  if (!M.ring->same_as(*N.ring)) throw std::invalid_argument("hom_module: modules over different rings");
  HomModule H;
  H.source = minimal_presentation(M);
  H.target = minimal_presentation(N);
  const RingPtr& ring = M.ring;
  const GradedModule& src = H.source;
  const GradedModule& tgt = H.target;
  const std::size_t r0 = src.num_generators(), r1 = src.relations.size(), g0 = tgt.num_generators();
  FreeModule F0 = src.free();

  std::vector<int> pshift(g0 * r0), qshift(g0 * r1);
  for (std::size_t g = 0; g < g0; ++g) {
    for (std::size_t a = 0; a < r0; ++a) pshift[g * r0 + a] = tgt.degrees[g] - src.degrees[a];
    for (std::size_t b = 0; b < r1; ++b) qshift[g * r1 + b] = tgt.degrees[g] - F0.degree(src.relations[b]);
  }
  FreeModule P(ring, pshift), Q(ring, qshift);

  // psi (x) f_a^* inside P
  std::vector<TermList> bound;
  for (const auto& psi : tgt.relations)
    for (std::size_t a = 0; a < r0; ++a) {
      TermList v;
      for (const auto& t : psi) v.push_back({t.mono, static_cast<std::uint32_t>(t.comp * r0 + a), t.coef});
      P.canonicalize(v);
      bound.push_back(std::move(v));
    }

  std::vector<TermList> cycles;
  if (r1 == 0) {
    for (std::uint32_t c = 0; c < g0 * r0; ++c) cycles.push_back({Term{ring->one(), c, 1}});
  } else {
    std::vector<TermList> images(g0 * r0);
    for (std::uint32_t b = 0; b < r1; ++b)
      for (const auto& t : src.relations[b])
        for (std::size_t g = 0; g < g0; ++g)
          images[g * r0 + t.comp].push_back({t.mono, static_cast<std::uint32_t>(g * r1 + b), t.coef});
    for (auto& v : images) Q.canonicalize(v);
    std::vector<TermList> rel;
    for (const auto& psi : tgt.relations)
      for (std::size_t b = 0; b < r1; ++b) {
        TermList v;
        for (const auto& t : psi) v.push_back({t.mono, static_cast<std::uint32_t>(t.comp * r1 + b), t.coef});
        Q.canonicalize(v);
        rel.push_back(std::move(v));
      }
    cycles = kernel(Q, images, rel, P);
  }

  // generators of cycles/boundaries: minimal generators of the sum, boundaries first
  std::vector<TermList> input = bound;
  input.insert(input.end(), cycles.begin(), cycles.end());
  GBasis g = groebner(P, input);
  std::vector<TermList> kept;
  for (auto idx : g.minimal_generators)
    if (idx >= bound.size()) kept.push_back(input[idx]);

  GradedModule hom{ring, {}, {}, M.ambient};
  for (const auto& v : kept) hom.degrees.push_back(P.degree(v));
  if (!kept.empty()) hom.relations = kernel(P, kept, bound, hom.free());
  H.module = std::move(hom);
  H.generator_maps = std::move(kept);
  return H;
}

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "isomorphic";
    case IsoVerdict::NotIsomorphic: return "not isomorphic";
    case IsoVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

BettiTable module_betti(const GradedModule& M, const ResolutionOptions& opts) {
  return minimal_betti_from_ranks(schreyer_resolution(M, opts));
}

IsoResult iso_probe(const GradedModule& A, const GradedModule& B, int trials, std::uint64_t seed) {
  if (!A.ring->same_as(*B.ring)) throw std::invalid_argument("iso_probe: modules over different rings");
  IsoResult res;
  if (!(module_hilbert(A).numerator == module_hilbert(B).numerator)) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "Hilbert series differ";
    return res;
  }
  if (!(module_betti(A) == module_betti(B))) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "graded Betti numbers differ";
    return res;
  }
  if (is_zero_module(A)) {
    res.verdict = IsoVerdict::Isomorphic;
    res.reason = "both modules are zero";
    res.witness = std::vector<TermList>{};
    return res;
  }

  const RingPtr& ring = A.ring;
  const PrimeField& k = ring->field();
  GradedModule a = minimal_presentation(A), b = minimal_presentation(B);
  FreeModule Fa = a.free(), G0 = b.free();
  GBasis gbB = groebner(G0, b.all_relations());
  Reducer red = make_reducer(G0, gbB.elements);

  struct Unknown {
    std::uint32_t gen, comp;
    Monomial mono;
  };
  std::vector<Unknown> unknowns;
  for (std::uint32_t i = 0; i < a.num_generators(); ++i)
    for (std::uint32_t g = 0; g < b.num_generators(); ++g) {
      int d = a.degrees[i] - b.degrees[g];
      if (d < 0) continue;
      for (const auto& m : monomials_of_degree(*ring, d))
        if (red.find(Term{m, g, 1}) < 0) unknowns.push_back({i, g, m});
    }

  // Column u: normal forms of the relations of A under x_u = 1.
  std::vector<std::vector<Polynomial>> ent(a.num_generators());
  for (std::uint32_t i = 0; i < a.num_generators(); ++i)
    for (const auto& rel : a.relations) ent[i].push_back(component(rel, i, ring));

  struct Key {
    std::size_t rel;
    Monomial mono;
    std::uint32_t comp;
    bool operator==(const Key& o) const { return rel == o.rel && mono == o.mono && comp == o.comp; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& x) const { return (x.mono.hash() * 31 + x.comp) * 131 + x.rel; }
  };
  std::unordered_map<Key, std::size_t, KeyHash> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns(unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& x = unknowns[u];
    for (std::size_t r = 0; r < a.relations.size(); ++r) {
      const Polynomial& e = ent[x.gen][r];
      if (e.is_zero()) continue;
      TermList v = terms::mul_monomial(embed(e, x.comp, G0), 1, x.mono, k);
      v = normal_form(G0, std::move(v), gbB.elements, red);
      for (const auto& t : v) {
        auto [it, fresh] = row_of.try_emplace(Key{r, t.mono, t.comp}, row_of.size());
        columns[u].push_back({it->second, t.coef});
      }
    }
  }
  std::vector<std::vector<Scalar>> mat(row_of.size(), std::vector<Scalar>(unknowns.size(), 0));
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (auto [r, c] : columns[u]) mat[r][u] = k.add(mat[r][u], c);
  auto basis = nullspace(std::move(mat), unknowns.size(), k);
  res.hom_dimension = static_cast<std::int64_t>(basis.size());
  if (basis.empty()) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "no nonzero degree-0 map";
    return res;
  }

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Scalar> x(unknowns.size(), 0);
    for (const auto& v : basis) {
      Scalar c = static_cast<Scalar>(rng() % k.characteristic());
      for (std::size_t u = 0; u < x.size(); ++u) x[u] = k.add(x[u], k.mul(c, v[u]));
    }
    std::vector<TermList> alpha(a.num_generators());
    for (std::size_t u = 0; u < x.size(); ++u)
      if (x[u]) alpha[unknowns[u].gen].push_back({unknowns[u].mono, unknowns[u].comp, x[u]});
    for (auto& v : alpha) G0.canonicalize(v);
    std::vector<TermList> gens = gbB.elements;
    for (const auto& v : alpha)
      if (!v.empty()) gens.push_back(v);
    GBasis img = groebner(G0, gens);
    std::vector<bool> hit(G0.rank(), false);
    for (const auto& e : img.elements)
      if (e.front().mono.is_one()) hit[e.front().comp] = true;
    bool onto = true;
    for (bool h : hit) onto = onto && h;
    if (onto) {
      res.verdict = IsoVerdict::Isomorphic;
      res.reason = "surjective degree-0 map between modules with equal Hilbert series";
      res.witness = std::move(alpha);
      return res;
    }
  }
  res.verdict = IsoVerdict::Unknown;
  res.reason = "no surjective map found in " + std::to_string(trials) + " random trials";
  return res;
}

int depth_by_regular_sequence(const GradedModule& M, std::uint64_t seed) {
  if (is_zero_module(M)) throw std::invalid_argument("depth_by_regular_sequence: zero module");
  const RingPtr& ring = M.ring;
  const PrimeField& k = ring->field();
  std::mt19937_64 rng(seed);
  GradedModule cur = M;
  TPoly num = module_hilbert(cur).numerator;
  const TPoly one_minus_t = TPoly::monomial(0) - TPoly::monomial(1);
  int depth = 0;
  // A form that passes the test is regular, so retrying a failed draw is safe.
  constexpr int kAttempts = 4;
  for (std::size_t step = 0; step < ring->nvars(); ++step) {
    bool extended = false;
    for (int attempt = 0; attempt < kAttempts && !extended; ++attempt) {
      TermList l;
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        Scalar c = static_cast<Scalar>(rng() % k.characteristic());
        if (c) l.push_back({ring->var(v), 0, c});
      }
      Polynomial form(ring, l);
      GradedModule next = cur;
      FreeModule F = cur.free();
      for (std::uint32_t g = 0; g < cur.num_generators(); ++g) next.relations.push_back(embed(form, g, F));
      TPoly nn = module_hilbert(next).numerator;
      if (!(nn == num * one_minus_t)) continue;
      extended = true;
      cur = std::move(next);
      num = std::move(nn);
    }
    if (!extended) break;
    ++depth;
  }
  return depth;
}

}  // namespace resint
