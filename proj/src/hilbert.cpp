#include "resint/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace resint {

void TPoly::add(int e, std::int64_t v) {
  if (!v) return;
  auto& slot = c_[e];
  slot += v;
  if (!slot) c_.erase(e);
}

TPoly& TPoly::operator+=(const TPoly& o) {
  for (auto [e, v] : o.c_) add(e, v);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  for (auto [e, v] : o.c_) add(e, -v);
  return *this;
}

TPoly TPoly::operator*(const TPoly& o) const {
  TPoly r;
  for (auto [a, x] : c_)
    for (auto [b, y] : o.c_) r.add(a + b, x * y);
  return r;
}

TPoly TPoly::shifted(int by) const {
  TPoly r;
  for (auto [e, v] : c_) r.c_[e + by] = v;
  return r;
}

std::int64_t TPoly::at_one() const {
  std::int64_t s = 0;
  for (auto [e, v] : c_) s += v;
  return s;
}

bool TPoly::divide_one_minus_t() {
  if (c_.empty() || at_one() != 0) return false;
  // q(t) with (1 - t) q(t) = p(t): q_e = sum_{k <= e} p_k
  std::map<int, std::int64_t> q;
  std::int64_t running = 0;
  int lo = c_.begin()->first, hi = c_.rbegin()->first;
  for (int e = lo; e < hi; ++e) {
    running += coeff(e);
    if (running) q[e] = running;
  }
  c_ = std::move(q);
  return true;
}

std::string TPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (auto [e, v] : c_) {
    if (!out.empty()) out += v < 0 ? " - " : " + ";
    else if (v < 0) out += "-";
    std::int64_t a = v < 0 ? -v : v;
    if (e == 0) out += std::to_string(a);
    else {
      if (a != 1) out += std::to_string(a) + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

void minimize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

TPoly numerator_rec(std::vector<Monomial> gens, const PolyRing& ring) {
  minimize(gens);
  if (gens.empty()) return TPoly::monomial(0);
  for (const auto& g : gens)
    if (g.is_one()) return TPoly();
  // pairwise coprime generators give a product formula
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!gens[i].coprime(gens[j])) coprime = false;
  if (coprime) {
    TPoly r = TPoly::monomial(0);
    for (const auto& g : gens) r = r * (TPoly::monomial(0) - TPoly::monomial(g.degree()));
    return r;
  }
  // pivot on the variable occurring in the most generators
  const std::size_t n = ring.nvars();
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t v = 0; v < n; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g.exp(v)) ++count;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  std::vector<int> exps;
  for (const auto& g : gens)
    if (g.exp(best)) exps.push_back(g.exp(best));
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  if (e == exps.back() && exps.front() < e) e = exps.front();
  Monomial p = ring.var(best, e);
  if (best_count <= 1) {
    // no shared variable can happen only with coprime gens; handled above
    throw std::logic_error("hilbert pivot failed");
  }
  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(p);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(g / ring.gcd(g, p));
  TPoly a = numerator_rec(std::move(with_pivot), ring);
  TPoly b = numerator_rec(std::move(quotient), ring);
  return a + b.shifted(p.degree());
}

}  // namespace

TPoly monomial_hilbert_numerator(std::vector<Monomial> gens, const PolyRing& ring) {
  return numerator_rec(std::move(gens), ring);
}

HilbertData hilbert_from_numerator(TPoly numerator, std::vector<int> weights) {
  HilbertData h;
  h.numerator = std::move(numerator);
  h.weights = std::move(weights);
  const int n = static_cast<int>(h.weights.size());
  if (h.numerator.is_zero()) {
    h.dimension = -1;
    h.degree = 0;
    return h;
  }
  TPoly q = h.numerator;
  int order = 0;
  while (q.divide_one_minus_t()) ++order;
  h.dimension = n - order;
  h.reduced_numerator = q;
  // multiplicity in the standard-graded sense; for weighted rings this is the
  // value of the cancelled numerator at t = 1
  h.degree = q.at_one();
  return h;
}

std::vector<std::int64_t> HilbertData::hilbert_function(int from, int to) const {
  std::vector<std::int64_t> out;
  if (to < from) return out;
  // expand numerator * prod 1/(1 - t^w) up to degree `to`
  std::map<int, std::int64_t> series;
  for (auto [e, v] : numerator.coeffs())
    if (e <= to) series[e] += v;
  for (int w : weights) {
    std::map<int, std::int64_t> next;
    for (auto [e, v] : series)
      for (int k = e; k <= to; k += w) next[k] += v;
    series = std::move(next);
  }
  for (int d = from; d <= to; ++d) {
    auto it = series.find(d);
    out.push_back(it == series.end() ? 0 : it->second);
  }
  return out;
}

HilbertData hilbert_from_leads(const FreeModule& F, const std::vector<TermList>& gb) {
  std::vector<std::vector<Monomial>> leads(F.rank());
  for (const auto& g : gb) leads[g.front().comp].push_back(g.front().mono);
  TPoly num;
  for (std::size_t c = 0; c < F.rank(); ++c)
    num += monomial_hilbert_numerator(leads[c], *F.ring()).shifted(F.shift(c));
  return hilbert_from_numerator(std::move(num), F.ring()->weights());
}

}  // namespace resint
