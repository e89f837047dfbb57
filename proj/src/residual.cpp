#include "resint/residual.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "resint/budget.hpp"
#include "resint/kernel.hpp"

namespace resint {

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Laplace expansion along the first row.
Polynomial determinant(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& A,
                       const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() == 1) return A[rows[0]][cols[0]];
  Polynomial det(ring);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial& a = A[rows[0]][cols[j]];
    if (a.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    Polynomial term = a * determinant(ring, A, sub_rows, sub_cols);
    det = j % 2 ? det - term : det + term;
  }
  return det;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Scalar nonzero_scalar(std::mt19937_64& rng, const PrimeField& k) {
  return static_cast<Scalar>(1 + rng() % (k.characteristic() - 1));
}

// Elements spanning I_delta: generators of degree e <= delta times monomials of degree delta - e.
std::vector<Polynomial> degree_span(const Ideal& I, int delta) {
  std::vector<Polynomial> out;
  for (const auto& g : I.generators()) {
    int e = g.degree();
    if (e > delta) continue;
    if (e == delta) {
      out.push_back(g);
      continue;
    }
    for (const auto& m : monomials_of_degree(*I.ring(), delta - e)) out.push_back(g.times(m));
  }
  return out;
}

std::size_t span_dim(const RingPtr& ring, const std::vector<Polynomial>& polys) {
  LinearSpan sp = polynomial_span(ring);
  for (const auto& f : polys) sp.add(f.terms());
  return sp.dim();
}

std::vector<Polynomial> products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& f : a)
    for (const auto& g : b) out.push_back(f * g);
  return out;
}

// Generators of I^k; I^0 is represented by the constant 1.
std::vector<Polynomial> power_gens(const Ideal& I, int k) {
  if (k == 0) return {Polynomial::constant(I.ring(), 1)};
  return ideal_power(I, static_cast<unsigned>(k)).generators();
}

int lowest_degree(const GradedModule& M) {
  return *std::min_element(M.degrees.begin(), M.degrees.end());
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return {name, CheckStatus::Skipped, std::string("budget: ") + e.what()};
  } catch (const std::exception& e) {
    return {name, CheckStatus::Unknown, std::string("error: ") + e.what()};
  }
}

CheckResult from_iso(const std::string& name, const IsoResult& r, const std::string& extra = {}) {
  CheckStatus s = r.verdict == IsoVerdict::Isomorphic      ? CheckStatus::Pass
                  : r.verdict == IsoVerdict::NotIsomorphic ? CheckStatus::Fail
                                                           : CheckStatus::Unknown;
  std::string detail = to_string(r.verdict) + " (" + r.reason + ")";
  if (!extra.empty()) detail += "; " + extra;
  return {name, s, detail};
}


// For M perfect of codim c with E = Ext^c(M, S): a map R(a) -> E, 1 -> e, whose
// kernel and cokernel have dimension at most dim R - 2 becomes an isomorphism
// under Ext^c(-, S), so M = Ext^c(E, S) = Ext^c(R, S)(-a) = omega_R(n - a).
// Tries random e among the generators of degree -a.
bool canonical_cover(const GradedModule& E, const Ideal& K, int n, int k, int dim_R, int trials,
                     std::uint64_t seed) {
  const int a = n - k;
  GradedModule Em = minimal_presentation(E);
  std::vector<std::uint32_t> gens;
  for (std::uint32_t i = 0; i < Em.num_generators(); ++i)
    if (Em.degrees[i] == -a) gens.push_back(i);
  if (gens.empty()) return false;
  const PrimeField& F = Em.ring->field();
  const FreeModule free = Em.free();
  const TPoly cyclic = module_hilbert(GradedModule::quotient(K).shifted(a)).numerator;
  const TPoly whole = module_hilbert(Em).numerator;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    TermList e;
    for (auto g : gens) e.push_back({Em.ring->one(), g, static_cast<Scalar>(1 + rng() % (F.characteristic() - 1))});
    free.canonicalize(e);
    GradedModule C = Em;
    C.relations.push_back(e);
    HilbertData hc = module_hilbert(C);
    if (hc.dimension > dim_R - 2) continue;
    // kernel = R(a) - (E - C) in the Grothendieck group
    TPoly ker = cyclic - whole + hc.numerator;
    int order = 0;
    while (!ker.is_zero() && order < n && ker.divide_one_minus_t()) ++order;
    if (ker.is_zero() || n - order <= dim_R - 2) return true;
  }
  return false;
}

}  // namespace

ScenarioRing generic_matrix_ring(int m, int n, std::uint32_t p) {
  if (m < 1 || n < m) throw std::invalid_argument("generic_matrix_ring: need 1 <= m <= n");
  std::vector<std::string> names;
  if (m == 2) {
    for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
    for (int j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
  } else {
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  }
  ScenarioRing sr;
  sr.ring = PolyRing::make(p, names);
  sr.kind = "generic";
  sr.rows = m;
  sr.cols = n;
  sr.entry_span = m * n;
  sr.matrix.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) sr.matrix[i].push_back(Polynomial::variable(sr.ring, i * n + j));
  return sr;
}

ScenarioRing custom_matrix_ring(RingPtr ring, std::vector<std::vector<Polynomial>> matrix) {
  if (matrix.empty() || matrix[0].empty()) throw std::invalid_argument("custom matrix: empty");
  for (const auto& row : matrix) {
    if (row.size() != matrix[0].size()) throw std::invalid_argument("custom matrix: ragged rows");
    for (const auto& e : row)
      if (!e.is_zero() && (!e.is_homogeneous() || e.degree() != 1))
        throw std::invalid_argument("custom matrix: entries must be linear forms");
  }
  ScenarioRing sr;
  sr.ring = std::move(ring);
  sr.kind = "custom";
  sr.rows = static_cast<int>(matrix.size());
  sr.cols = static_cast<int>(matrix[0].size());
  sr.entry_span = entry_span_dimension(sr.ring, matrix);
  sr.matrix = std::move(matrix);
  return sr;
}

Ideal matrix_minors(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& A, int k) {
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : 0;
  if (k < 1 || k > m || m > n) throw std::invalid_argument("matrix_minors: need 1 <= k <= m <= n");
  std::vector<Polynomial> gens;
  for (const auto& rows : subsets(m, k))
    for (const auto& cols : subsets(n, k)) gens.push_back(determinant(ring, A, rows, cols));
  return Ideal(ring, std::move(gens));
}

Ideal matrix_minors(const ScenarioRing& sr, int k) { return matrix_minors(sr.ring, sr.matrix, k); }

int entry_span_dimension(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& A) {
  std::vector<Polynomial> all;
  for (const auto& row : A) all.insert(all.end(), row.begin(), row.end());
  return static_cast<int>(span_dim(ring, all));
}

GeneralForms general_forms(const Ideal& I, int count, int delta, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("general_forms: negative count");
  GeneralForms out;
  out.seed = seed;
  const RingPtr& ring = I.ring();
  if (count == 0) {
    out.ideal = Ideal::zero(ring, I.ambient());
    return out;
  }
  std::vector<Polynomial> span = degree_span(I, delta);
  if (!I.ambient().empty()) {
    Ideal amb = I.ambient_ideal();
    std::erase_if(span, [&](const Polynomial& f) { return amb.contains(f); });
  }
  if (span.empty()) throw std::invalid_argument("general_forms: I has no elements of degree " + std::to_string(delta));
  out.spanning_size = span.size();
  const PrimeField& k = ring->field();
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> forms;
  for (int i = 0; i < count; ++i) {
    std::vector<Scalar> c;
    Polynomial f(ring);
    for (const auto& g : span) {
      c.push_back(nonzero_scalar(rng, k));
      f = f + g.scaled(c.back());
    }
    out.coefficients.push_back(std::move(c));
    forms.push_back(std::move(f));
  }
  for (const auto& f : forms)
    if (!I.contains(f)) throw std::logic_error("general_forms: combination left the ideal");
  out.ideal = I.with_generators(std::move(forms));
  return out;
}

int analytic_spread(const Ideal& I) {
  const int delta = I.single_degree();
  if (I.generators().empty()) return 0;
  if (delta < 0) throw std::invalid_argument("analytic_spread: generators in several degrees");
  const RingPtr& S = I.ring();
  const std::size_t n = S->nvars(), g = I.size();
  std::vector<std::string> names = S->var_names(), tnames;
  std::vector<int> weights = S->weights();
  for (std::size_t i = 0; i < g; ++i) {
    std::string t = "T" + std::to_string(i + 1);
    while (S->index_of(t)) t = "_" + t;
    names.push_back(t);
    tnames.push_back(t);
    weights.push_back(delta);
  }
  auto G = PolyRing::make(S->field().characteristic(), names, MonomialOrder::degrevlex(), weights);
  std::vector<int> into(n);
  for (std::size_t i = 0; i < n; ++i) into[i] = static_cast<int>(i);
  std::vector<Polynomial> graph;
  for (std::size_t i = 0; i < g; ++i)
    graph.push_back(Polynomial::variable(G, n + i) - map_variables(I.generators()[i], G, into));
  for (const auto& k : I.ambient()) graph.push_back(map_variables(k, G, into));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g; ++i) keep.push_back(n + i);
  Ideal E = eliminate(Ideal(G, graph), keep);

  auto T = PolyRing::make(S->field().characteristic(), tnames);
  std::vector<int> back(n + g, -1);
  for (std::size_t i = 0; i < g; ++i) back[n + i] = static_cast<int>(i);
  std::vector<Polynomial> rel;
  for (const auto& f : E.generators()) rel.push_back(map_variables(f, T, back));
  return dimension(Ideal(T, rel));
}

ReductionResult reduction_number(const Ideal& I, int ell, std::uint64_t seed, int r_max, int retries) {
  const int delta = I.single_degree();
  if (delta < 0) throw std::invalid_argument("reduction_number: generators in several degrees");
  if (ell < 1) throw std::invalid_argument("reduction_number: analytic spread must be positive");
  const RingPtr& ring = I.ring();
  std::optional<GBasis> amb;
  if (!I.ambient().empty()) amb = I.ambient_ideal().gb();
  auto dim_of = [&](std::vector<Polynomial> polys) {
    if (amb) {
      FreeModule F = FreeModule::ideal_ambient(ring);
      for (auto& f : polys) f = Polynomial::from_sorted(ring, normal_form(F, f.terms(), amb->elements));
    }
    return span_dim(ring, polys);
  };
  std::vector<std::vector<Polynomial>> powers;
  std::vector<std::size_t> power_dims;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    ReductionResult out;
    out.seed = seed + static_cast<std::uint64_t>(attempt);
    out.attempts = attempt + 1;
    out.J = general_forms(I, ell, delta, out.seed).ideal;
    for (int r = 0; r <= r_max; ++r) {
      while (static_cast<int>(powers.size()) <= r + 1) {
        powers.push_back(power_gens(I, static_cast<int>(powers.size())));
        power_dims.push_back(dim_of(powers.back()));
      }
      if (dim_of(products(out.J.generators(), powers[r])) == power_dims[r + 1]) {
        out.r = r;
        return out;
      }
    }
  }
  throw std::runtime_error("reduction_number: no reduction found within the retry budget");
}

PipelineState residual_intersection(const Ideal& I, int s, std::uint64_t seed, const ResidualOptions& opts) {
  PipelineState st;
  st.I = I;
  st.s = s;
  st.delta = I.single_degree();
  if (st.delta < 0) throw std::invalid_argument("residual_intersection: I must be generated in one degree");
  st.codim_I = codimension(I);
  if (s < st.codim_I) throw std::invalid_argument("residual_intersection: s below codim I");
  for (int attempt = 0; attempt <= opts.retries; ++attempt) {
    st.seed = seed + static_cast<std::uint64_t>(attempt);
    st.attempts = attempt + 1;
    st.J = general_forms(I, s, st.delta, st.seed).ideal;
    if (s == 0 || !st.J.is_zero()) break;
    if (attempt == opts.retries) throw std::runtime_error("residual_intersection: every draw of J was zero");
  }
  st.K = colon(st.J, I);
  st.codim_K = codimension(st.K);
  st.residual = st.codim_K >= s;
  st.codim_I_plus_K = codimension(ideal_sum(I, st.K));
  st.geometric = st.residual && st.codim_I_plus_K > s;
  if (opts.saturate) {
    Saturation sat = saturate(st.J, I);
    st.H = sat.ideal;
    st.epsilon = sat.exponent;
  }
  return st;
}

GradedModule power_quotient_module(const Ideal& I, const Ideal& J, int rho) {
  if (rho < 1) throw std::invalid_argument("power_quotient_module: rho must be positive");
  const RingPtr& ring = I.ring();
  const int delta = I.single_degree();
  if (delta < 0) throw std::invalid_argument("power_quotient_module: I must be generated in one degree");
  std::vector<Polynomial> sub = products(J.generators(), power_gens(I, rho - 1));
  LinearSpan sp = polynomial_span(ring);
  for (const auto& f : sub) sp.add(f.terms());
  std::vector<TermList> images;
  for (const auto& f : power_gens(I, rho))
    if (sp.add(f.terms())) images.push_back(f.terms());
  GradedModule M{ring, std::vector<int>(images.size(), 0), {}, {}};
  if (images.empty()) return M;
  Ideal Q(ring, sub, I.ambient());
  FreeModule source(ring, std::vector<int>(images.size(), rho * delta));
  M.relations = kernel(FreeModule::ideal_ambient(ring), images, Q.gb().elements, source);
  return M;
}

StabilizationResult stabilization_index(const PipelineState& st, int rho_max, std::uint64_t seed) {
  StabilizationResult out;
  const RingPtr& ring = st.I.ring();
  Polynomial a = general_forms(st.I, 1, st.delta, seed).ideal.generators().front();
  std::optional<TPoly> prev;
  for (int rho = 1; rho <= rho_max; ++rho) {
    std::vector<Polynomial> P = power_gens(st.I, rho);
    std::vector<Polynomial> image = products(st.J.generators(), P);
    for (const auto& f : P) image.push_back(a * f);
    const bool onto = span_dim(ring, image) == span_dim(ring, power_gens(st.I, rho + 1));
    if (!prev) prev = module_hilbert(power_quotient_module(st.I, st.J, rho)).numerator;
    TPoly next = module_hilbert(power_quotient_module(st.I, st.J, rho + 1)).numerator;
    const bool same = next == *prev;
    std::ostringstream os;
    os << "rho=" << rho << ": onto " << (onto ? "yes" : "no") << ", equal Hilbert series " << (same ? "yes" : "no");
    out.log.push_back(os.str());
    prev = std::move(next);
    if (onto && same) {
      out.index = rho;
      return out;
    }
  }
  return out;
}

void stable_power_module(PipelineState& st, std::optional<int> rho, bool verify, std::optional<int> rho_max) {
  const int base = std::max(st.r, 1);
  st.rho = rho.value_or(base);
  st.M = power_quotient_module(st.I, st.J, st.rho);
  if (verify) st.stabilization_index = stabilization_index(st, rho_max.value_or(base + 3), st.seed ^ 0x5bd1e995u).index;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unknown: return "unknown";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

ShiftedIso iso_up_to_shift(const GradedModule& A, const GradedModule& B, int trials, std::uint64_t seed) {
  ShiftedIso out;
  GradedModule a = minimal_presentation(A), b = minimal_presentation(B);
  if (!a.degrees.empty() && !b.degrees.empty()) out.shift = lowest_degree(b) - lowest_degree(a);
  out.iso = iso_probe(a, b.shifted(out.shift), trials, seed);
  return out;
}

std::vector<CheckResult> self_duality_report(const PipelineState& st, const SelfDualityOptions& opts,
                                             std::uint64_t seed) {
  if (!st.M) throw std::invalid_argument("self_duality_report: stable power module not computed");
  const GradedModule& M = *st.M;
  const int n = static_cast<int>(st.I.ring()->nvars());
  const int dim_R = n - st.codim_K;
  std::vector<CheckResult> out;

  BettiTable betti = module_betti(M);
  out.push_back(guarded("linear presentation", [&] {
    auto lin = linearity_check(betti);
    return CheckResult{"linear presentation", lin.presentation ? CheckStatus::Pass : CheckStatus::Fail, ""};
  }));
  out.push_back(guarded("linear resolution", [&] {
    auto lin = linearity_check(betti);
    return CheckResult{"linear resolution", lin.resolution ? CheckStatus::Pass : CheckStatus::Fail,
                       lin.resolution ? "" : "first nonlinear step " + std::to_string(lin.first_nonlinear_step)};
  }));

  std::optional<DepthInfo> depth;
  std::optional<BudgetExceeded> depth_budget;
  try {
    depth = depth_pd(M);
  } catch (const BudgetExceeded& e) {
    depth_budget = e;
  } catch (const std::exception&) {
  }
  out.push_back(guarded("MCM over R", [&] {
    if (depth_budget) throw *depth_budget;
    if (!depth) return CheckResult{"MCM over R", CheckStatus::Unknown, "depth unavailable"};
    std::string d = "depth " + std::to_string(depth->depth) + ", dim R " + std::to_string(dim_R);
    return CheckResult{"MCM over R", depth->depth == dim_R ? CheckStatus::Pass : CheckStatus::Fail, d};
  }));
  if (st.epsilon >= 0) {
    out.push_back(guarded("MCM over R-bar", [&] {
      const int dim_Rbar = n - codimension(st.H);
      if (depth_budget) throw *depth_budget;
      if (!depth) return CheckResult{"MCM over R-bar", CheckStatus::Unknown, "depth unavailable"};
      std::string d = "depth " + std::to_string(depth->depth) + ", dim R-bar " + std::to_string(dim_Rbar);
      return CheckResult{"MCM over R-bar", depth->depth == dim_Rbar ? CheckStatus::Pass : CheckStatus::Fail, d};
    }));
  }

  // Hom_R(M, omega_R) = Ext^c_S(M, S)(-n) for c = codim K, as K annihilates M
  std::optional<GradedModule> ext;
  std::optional<BudgetExceeded> ext_budget;
  try {
    ext = ext_module(M, st.codim_K);
  } catch (const BudgetExceeded& e) {
    ext_budget = e;
  } catch (const std::exception&) {
  }
  if (opts.omega_shift) {
    const int k = *opts.omega_shift;
    out.push_back(guarded("M = omega_R(k)", [&] {
      std::string d = "k = " + std::to_string(k);
      if (ext && depth && depth->depth == dim_R &&
          canonical_cover(*ext, st.K, n, k, dim_R, opts.trials, seed))
        return CheckResult{"M = omega_R(k)", CheckStatus::Pass,
                           d + ", via R(n - k) -> Ext^c(M, S) with kernel and cokernel of dimension <= dim R - 2, M "
                               "perfect"};
      GradedModule omega = canonical_module(st.K);
      return from_iso("M = omega_R(k)", iso_probe(M, omega.shifted(k), opts.trials, seed), d);
    }));
  }
  out.push_back(guarded("self-dual", [&] {
    if (ext_budget) throw *ext_budget;
    if (!ext) return CheckResult{"self-dual", CheckStatus::Unknown, "Ext^c(M, S) unavailable"};
    auto r = iso_up_to_shift(M, ext->shifted(-n), opts.trials, seed + 1);
    return from_iso("self-dual", r.iso, "Hom(M, omega_R) shifted by " + std::to_string(r.shift));
  }));
  if (opts.endomorphisms) {
    out.push_back(guarded("End(M) = M", [&] {
      GradedModule E = hom_module(M, M).module;
      return from_iso("End(M) = M", iso_probe(E, M, opts.trials, seed + 2));
    }));
  }
  out.push_back(guarded("Ulrich", [&] {
    HilbertData h = module_hilbert(M);
    std::int64_t mu = betti.total(0);
    std::ostringstream os;
    os << "e(M) " << h.degree << ", generators " << mu;
    std::int64_t eR = degree(st.epsilon >= 0 ? st.H : st.K);
    if (eR > 0 && h.degree % eR == 0)
      os << ", rank " << h.degree / eR;
    else
      os << ", rank inconclusive";
    if (depth_budget) throw *depth_budget;
    if (!depth) return CheckResult{"Ulrich", CheckStatus::Unknown, os.str()};
    bool ok = depth->depth == dim_R && h.dimension == dim_R && h.degree == mu;
    return CheckResult{"Ulrich", ok ? CheckStatus::Pass : CheckStatus::Fail, os.str()};
  }));
  if (opts.conductor && st.rho >= 1) {
    out.push_back(guarded("conductor", [&] {
      const Ideal& Hb = st.epsilon >= 0 ? st.H : st.K;
      Polynomial a = general_forms(st.I, 1, st.delta, seed + 3).ideal.generators().front();
      Polynomial ap = Polynomial::constant(a.ring(), 1);
      for (int i = 0; i < st.rho; ++i) ap = ap * a;
      Ideal num(a.ring(), {ap}, Hb.all_generators());
      Ideal den(a.ring(), power_gens(st.I, st.rho), Hb.all_generators());
      Ideal c = colon(num, den);
      std::ostringstream os;
      Ideal cm = c.minimalized();
      os << cm.size() << " generators, codim " << codimension(c) << " in S";
      return CheckResult{"conductor", c.contains(ap) ? CheckStatus::Pass : CheckStatus::Fail, os.str()};
    }));
  }
  return out;
}

bool g_condition_check(int m, int n, int s) {
  for (int t = 0; t < m; ++t) {
    const std::int64_t c = static_cast<std::int64_t>(m - t) * (n - t);
    if (c <= s - 1 && binomial(n - t, m - t) > c) return false;
  }
  return true;
}

int generic_minor_codimension(int m, int n, int size) {
  return codimension(matrix_minors(generic_matrix_ring(m, n), size));
}

std::int64_t grassmannian_degree(int n) { return binomial(2 * n - 4, n - 2) / (n - 1); }

}  // namespace resint
