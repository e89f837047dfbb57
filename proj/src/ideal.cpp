#include "resint/ideal.hpp"

#include <algorithm>
#include <unordered_map>
#include <stdexcept>

#include "resint/gb_cache.hpp"
#include "resint/kernel.hpp"

namespace resint {
namespace {

std::vector<Polynomial> drop_zero(std::vector<Polynomial> v) {
  std::erase_if(v, [](const Polynomial& f) { return f.is_zero(); });
  return v;
}

bool same_polys(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::vector<TermList> to_terms(const std::vector<Polynomial>& polys) {
  std::vector<TermList> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(f.terms());
  return out;
}

std::size_t poly_hash(const Polynomial& f) {
  std::size_t h = f.size();
  for (const auto& t : f.terms()) h = h * 1000003u ^ (t.mono.hash() + t.coef);
  return h;
}

/// Deduplicates up to scalars, keeping first occurrences.
std::vector<Polynomial> dedup_monic(std::vector<Polynomial> v) {
  std::vector<Polynomial> out;
  std::unordered_multimap<std::size_t, Polynomial> seen;
  for (auto& f : v) {
    if (f.is_zero()) continue;
    Polynomial m = f.monic();
    std::size_t h = poly_hash(m);
    auto [lo, hi] = seen.equal_range(h);
    bool dup = false;
    for (auto it = lo; it != hi && !dup; ++it) dup = it->second == m;
    if (dup) continue;
    seen.emplace(h, std::move(m));
    out.push_back(std::move(f));
  }
  return out;
}

void monomials_rec(const PolyRing& ring, std::size_t var, int left, std::vector<int>& exps,
                   std::vector<Monomial>& out) {
  if (var + 1 == ring.nvars()) {
    int w = ring.weight(var);
    if (left % w) return;
    exps[var] = left / w;
    out.push_back(ring.monomial(exps));
    exps[var] = 0;
    return;
  }
  int w = ring.weight(var);
  for (int e = left / w; e >= 0; --e) {
    exps[var] = e;
    monomials_rec(ring, var + 1, left - e * w, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens, std::vector<Polynomial> ambient)
    : ring_(std::move(ring)), gens_(drop_zero(std::move(gens))), ambient_(drop_zero(std::move(ambient))) {
  if (!ring_) throw std::invalid_argument("ideal: null ring");
  for (const auto* list : {&gens_, &ambient_})
    for (const auto& f : *list)
      if (!same_ring(f.ring(), ring_)) throw std::invalid_argument("ideal: generator from another ring");
}

Ideal Ideal::unit(RingPtr ring, std::vector<Polynomial> ambient) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one}, std::move(ambient));
}

Ideal Ideal::zero(RingPtr ring, std::vector<Polynomial> ambient) {
  return Ideal(std::move(ring), {}, std::move(ambient));
}

Ideal Ideal::from_basis(RingPtr ring, GBasis basis, std::vector<Polynomial> ambient) {
  std::vector<Polynomial> gens;
  for (const auto& e : basis.elements) gens.push_back(Polynomial::from_sorted(ring, e));
  Ideal out(std::move(ring), std::move(gens), std::move(ambient));
  std::call_once(out.lazy_->once, [&] { out.lazy_->gb = std::move(basis); });
  return out;
}

const GBasis& Ideal::gb() const {
  std::call_once(lazy_->once, [this] {
    lazy_->gb = cached_groebner(FreeModule::ideal_ambient(ring_), to_terms(all_generators()));
  });
  return lazy_->gb;
}

std::vector<Polynomial> Ideal::all_generators() const {
  std::vector<Polynomial> all = gens_;
  all.insert(all.end(), ambient_.begin(), ambient_.end());
  return all;
}

Polynomial Ideal::reduce(const Polynomial& f) const {
  const GBasis& g = gb();
  return Polynomial::from_sorted(ring_, normal_form(g.module, f.terms(), g.elements));
}

bool Ideal::contains(const Polynomial& f) const { return f.is_zero() || reduce(f).is_zero(); }

bool Ideal::contains(const Ideal& o) const {
  for (const auto& f : o.generators())
    if (!contains(f)) return false;
  for (const auto& f : o.ambient())
    if (!contains(f)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& e = gb().elements;
  return !e.empty() && e.front().front().mono.is_one();
}

bool Ideal::is_zero() const {
  if (gens_.empty()) return true;
  Ideal amb = ambient_ideal();
  for (const auto& f : gens_)
    if (!amb.contains(f)) return false;
  return true;
}

bool Ideal::is_homogeneous() const {
  for (const auto* list : {&gens_, &ambient_})
    for (const auto& f : *list)
      if (!f.is_homogeneous()) return false;
  return true;
}

std::vector<int> Ideal::degrees() const {
  std::vector<int> d;
  for (const auto& f : gens_) d.push_back(f.degree());
  return d;
}

int Ideal::single_degree() const {
  if (gens_.empty()) return -1;
  int d = gens_.front().degree();
  for (const auto& f : gens_)
    if (f.degree() != d) return -1;
  return d;
}

Ideal Ideal::minimalized() const {
  if (!is_homogeneous()) throw std::invalid_argument("minimalized: homogeneous ideal required");
  std::vector<Polynomial> input = ambient_;
  input.insert(input.end(), gens_.begin(), gens_.end());
  GBasis g = groebner(FreeModule::ideal_ambient(ring_), to_terms(input));
  std::vector<Polynomial> keep;
  for (auto idx : g.minimal_generators)
    if (idx >= ambient_.size()) keep.push_back(input[idx]);
  return Ideal(ring_, std::move(keep), ambient_);
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

void require_compatible(const Ideal& a, const Ideal& b, const char* op) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument(std::string(op) + ": ideals in different rings");
  if (!same_polys(a.ambient(), b.ambient()))
    throw std::invalid_argument(std::string(op) + ": ideals over different quotient rings");
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_compatible(a, b, "sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return a.with_generators(dedup_monic(std::move(gens)));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_compatible(a, b, "product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return a.with_generators(dedup_monic(std::move(gens)));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_compatible(a, b, "intersect");
  const RingPtr& R = a.ring();
  FreeModule target(R, {0, 0});
  FreeModule source(R, {0});
  TermList image{{R->one(), 0, 1}, {R->one(), 1, 1}};
  target.canonicalize(image);
  std::vector<TermList> rel;
  for (const auto& g : a.gb().elements) rel.push_back(g);
  for (const auto& g : b.gb().elements) {
    TermList v = g;
    for (auto& t : v) t.comp = 1;
    rel.push_back(std::move(v));
  }
  auto ker = kernel(target, {image}, rel, source);
  GBasis basis;
  basis.module = FreeModule::ideal_ambient(R);
  basis.elements = std::move(ker);
  basis.homogeneous = a.is_homogeneous() && b.is_homogeneous();
  return Ideal::from_basis(R, std::move(basis), a.ambient());
}

Ideal ideal_power(const Ideal& a, unsigned rho) {
  if (rho == 0) return Ideal::unit(a.ring(), a.ambient());
  const auto& g = a.generators();
  // multisets of generator indices in nondecreasing order
  std::vector<Polynomial> layer = g;
  std::vector<std::size_t> last(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) last[i] = i;
  for (unsigned k = 1; k < rho; ++k) {
    std::vector<Polynomial> next;
    std::vector<std::size_t> next_last;
    for (std::size_t p = 0; p < layer.size(); ++p)
      for (std::size_t i = last[p]; i < g.size(); ++i) {
        next.push_back(layer[p] * g[i]);
        next_last.push_back(i);
      }
    layer = std::move(next);
    last = std::move(next_last);
  }
  return a.with_generators(dedup_monic(std::move(layer)));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_compatible(a, b, "colon");
  if (b.is_zero()) throw std::invalid_argument("colon: zero divisor ideal");
  const RingPtr& R = a.ring();
  std::vector<Polynomial> outside;
  for (const auto& g : b.generators())
    if (!a.contains(g)) outside.push_back(g);
  if (outside.empty()) return Ideal::unit(R, a.ambient());

  std::vector<int> shifts;
  for (const auto& g : outside) shifts.push_back(-g.degree());
  FreeModule target(R, shifts);
  FreeModule source(R, {0});
  TermList image;
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (auto t : outside[i].terms()) {
      t.comp = static_cast<std::uint32_t>(i);
      image.push_back(t);
    }
  target.canonicalize(image);
  std::vector<TermList> rel;
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (const auto& g : a.gb().elements) {
      TermList v = g;
      for (auto& t : v) t.comp = static_cast<std::uint32_t>(i);
      rel.push_back(std::move(v));
    }
  auto ker = kernel(target, {image}, rel, source);
  GBasis basis;
  basis.module = FreeModule::ideal_ambient(R);
  basis.elements = std::move(ker);
  basis.homogeneous = a.is_homogeneous() && b.is_homogeneous();
  Ideal out = Ideal::from_basis(R, std::move(basis), a.ambient());
  for (const auto& f : out.generators())
    for (const auto& g : outside)
      if (!a.contains(f * g)) throw std::logic_error("colon: (a:b)*b is not contained in a");
  return out;
}

Ideal colon(const Ideal& a, const Polynomial& f) { return colon(a, a.with_generators({f})); }

Saturation saturate(const Ideal& a, const Ideal& b) {
  Saturation s{a, 0};
  for (;;) {
    Ideal next = colon(s.ideal, b);
    if (s.ideal.contains(next)) return s;
    s.ideal = std::move(next);
    ++s.exponent;
  }
}

Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& keep) {
  const RingPtr& R = a.ring();
  const std::size_t n = R->nvars();
  std::vector<bool> kept(n, false);
  for (auto v : keep) {
    if (v >= n) throw std::invalid_argument("eliminate: variable index out of range");
    kept[v] = true;
  }
  if (keep.empty()) return a.folded().is_unit() ? Ideal::unit(R) : Ideal::zero(R);
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i)
    if (!kept[i]) perm.push_back(i);
  const std::size_t block = perm.size();
  if (block == 0) return a.folded();
  for (std::size_t i = 0; i < n; ++i)
    if (kept[i]) perm.push_back(i);

  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<int> forward(n), backward(n);
  for (std::size_t j = 0; j < n; ++j) {
    names.push_back(R->var_name(perm[j]));
    weights.push_back(R->weight(perm[j]));
    forward[perm[j]] = static_cast<int>(j);
    backward[j] = static_cast<int>(perm[j]);
  }
  auto E = PolyRing::make(R->field().characteristic(), names, MonomialOrder::elimination(block), weights);
  std::vector<TermList> gens;
  for (const auto& f : a.all_generators()) gens.push_back(map_variables(f, E, forward).terms());
  GBasis g = cached_groebner(FreeModule::ideal_ambient(E), std::move(gens));
  std::vector<Polynomial> out;
  for (const auto& e : g.elements) {
    bool clean = true;
    for (std::size_t v = 0; v < block && clean; ++v) clean = e.front().mono.exp(v) == 0;
    if (clean) out.push_back(map_variables(Polynomial::from_sorted(E, e), R, backward));
  }
  return Ideal(R, std::move(out));
}

HilbertData hilbert_invariants(const Ideal& a) {
  if (!a.is_homogeneous()) throw std::invalid_argument("hilbert_invariants: homogeneous ideal required");
  const RingPtr& R = a.ring();
  if (R->order().kind == OrderKind::Degrevlex) {
    const GBasis& g = a.gb();
    return hilbert_from_leads(g.module, g.elements);
  }
  auto D = R->with_order(MonomialOrder::degrevlex());
  std::vector<Polynomial> gens, amb;
  for (const auto& f : a.generators()) gens.push_back(f.in_ring(D));
  for (const auto& f : a.ambient()) amb.push_back(f.in_ring(D));
  Ideal b(D, std::move(gens), std::move(amb));
  return hilbert_from_leads(b.gb().module, b.gb().elements);
}

int dimension(const Ideal& a) { return hilbert_invariants(a).dimension; }

int codimension(const Ideal& a) {
  int d = dimension(a);
  int n = static_cast<int>(a.ring()->nvars());
  return d < 0 ? n + 1 : n - d;
}

std::int64_t degree(const Ideal& a) { return hilbert_invariants(a).degree; }

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0 || ring.nvars() == 0) {
    if (d == 0) out.push_back(ring.one());
    return out;
  }
  std::vector<int> exps(ring.nvars(), 0);
  monomials_rec(ring, 0, d, exps, out);
  return out;
}

Ideal maximal_ideal(const RingPtr& ring, std::vector<Polynomial> ambient) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars), std::move(ambient));
}

Ideal truncate_ideal(const Ideal& a, int t) {
  if (!a.is_homogeneous()) throw std::invalid_argument("truncate: homogeneous ideal required");
  for (int d : a.degrees())
    if (d > t) throw std::invalid_argument("truncate: degree below a generator degree");
  const RingPtr& R = a.ring();
  LinearSpan span = polynomial_span(R);
  std::vector<Polynomial> out;
  for (const auto& g : a.generators())
    for (const auto& m : monomials_of_degree(*R, t - g.degree())) {
      Polynomial f = g.times(m);
      if (span.add(f.terms())) out.push_back(std::move(f));
    }
  return a.with_generators(std::move(out));
}

namespace {

using Exps = std::vector<int>;

Exps exps_of(const Monomial& m, std::size_t n) {
  Exps e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = m.exp(i);
  return e;
}

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Exps> minimize(std::vector<Exps> g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Exps> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j)
      redundant = j != i && divides(g[j], g[i]);
    if (!redundant) out.push_back(g[i]);
  }
  return out;
}

/// Components as exponent vectors: entry v > 0 means x_v^entry is a generator.
void split(std::vector<Exps> gens, std::vector<Exps>& comps) {
  gens = minimize(std::move(gens));
  for (const auto& g : gens)
    if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; })) return;  // unit ideal
  for (const auto& g : gens) {
    int support = 0, var = -1;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g[v]) {
        ++support;
        if (var < 0) var = static_cast<int>(v);
      }
    if (support < 2) continue;
    Exps power(g.size(), 0), rest = g;
    power[var] = g[var];
    rest[var] = 0;
    auto with_power = gens, with_rest = gens;
    with_power.push_back(power);
    with_rest.push_back(rest);
    split(std::move(with_power), comps);
    split(std::move(with_rest), comps);
    return;
  }
  Exps comp(gens.empty() ? 0 : gens.front().size(), 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g[v]) comp[v] = g[v];
  comps.push_back(std::move(comp));
}

/// Irreducible component a lies inside component b.
bool component_inside(const Exps& a, const Exps& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] && (!b[v] || b[v] > a[v])) return false;
  return true;
}

}  // namespace

std::vector<Ideal> monomial_irreducible_decomposition(const Ideal& a) {
  if (!a.ambient().empty()) throw std::invalid_argument("irreducible decomposition: ideal of S required");
  const RingPtr& R = a.ring();
  const std::size_t n = R->nvars();
  std::vector<Exps> gens;
  for (const auto& f : a.generators()) {
    if (!f.is_monomial()) throw std::invalid_argument("irreducible decomposition: monomial generators required");
    gens.push_back(exps_of(f.leading().mono, n));
  }
  std::vector<Exps> comps;
  if (gens.empty()) comps.push_back(Exps(n, 0));
  else split(std::move(gens), comps);
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

  std::vector<Ideal> out;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    bool redundant = false;
    for (std::size_t i = 0; i < comps.size() && !redundant; ++i)
      redundant = i != j && component_inside(comps[i], comps[j]);
    if (redundant) continue;
    std::vector<Polynomial> g;
    for (std::size_t v = 0; v < n; ++v)
      if (comps[j][v]) g.push_back(Polynomial::monomial(R, R->var(v, comps[j][v])));
    out.emplace_back(R, std::move(g));
  }
  return out;
}

bool is_unmixed_monomial(const Ideal& a) {
  auto comps = monomial_irreducible_decomposition(a);
  for (const auto& c : comps)
    if (c.size() != comps.front().size()) return false;
  return true;
}

TermList LinearSpan::reduce(TermList v) const {
  std::size_t i = 0;
  while (i < v.size()) {
    auto it = pivots_.find(Key{v[i].mono, v[i].comp});
    if (it == pivots_.end()) {
      ++i;
      continue;
    }
    const TermList& row = rows_[it->second];
    v = terms::sub_mul(v, v[i].coef, Monomial{}, row, field_, cmp_);
  }
  return v;
}

bool LinearSpan::add(TermList v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  terms::make_monic(v, field_);
  pivots_.emplace(Key{v.front().mono, v.front().comp}, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

LinearSpan polynomial_span(const RingPtr& ring) {
  return LinearSpan(ring->field(), [ring](const Term& a, const Term& b) { return ring->compare(a.mono, b.mono); });
}

}  // namespace resint
