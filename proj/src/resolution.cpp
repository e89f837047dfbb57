#include "resint/resolution.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "resint/budget.hpp"
#include "resint/gb_cache.hpp"

namespace resint {
namespace {

/// One level of a Schreyer frame. Element k has leading term lead[k] times
/// basis element lead_comp[k] of the previous level; total[k]/comp0[k] is the
/// leading term pushed all the way down to F_0.
struct Level {
  std::vector<Monomial> lead;
  std::vector<std::uint32_t> lead_comp;
  std::vector<Monomial> total;
  std::vector<std::uint32_t> comp0;
  std::vector<int> degree;
  std::vector<std::uint32_t> rank;
  std::vector<TermList> vec;

  std::size_t size() const { return degree.size(); }
};

/// Schreyer order on terms whose components are elements of `level`: compare
/// the induced terms of F_0, then break ties by the chain of indices.
struct SchreyerCmp {
  const FreeModule* F0;
  const Level* level;
  int operator()(const Term& a, const Term& b) const {
    Term x{a.mono * level->total[a.comp], level->comp0[a.comp], 1};
    Term y{b.mono * level->total[b.comp], level->comp0[b.comp], 1};
    int c = F0->compare(x, y);
    if (c) return c;
    auto ra = level->rank[a.comp], rb = level->rank[b.comp];
    return ra == rb ? 0 : (ra > rb ? 1 : -1);
  }
};

bool lex_greater(const Monomial& a, const Monomial& b) {
  int v = a.first_difference(b);
  return v >= 0 && a.exp(v) > b.exp(v);
}

/// Orders elements by (lead_comp, lead descending in lex); this keeps the
/// frame length within the number of variables.
std::vector<std::size_t> frame_order(const std::vector<std::uint32_t>& comp, const std::vector<Monomial>& lead) {
  std::vector<std::size_t> idx(comp.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (comp[a] != comp[b]) return comp[a] < comp[b];
    return lex_greater(lead[a], lead[b]);
  });
  return idx;
}

void assign_ranks(Level& cur, const Level& prev) {
  std::vector<std::size_t> idx(cur.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto ra = prev.rank[cur.lead_comp[a]], rb = prev.rank[cur.lead_comp[b]];
    return ra != rb ? ra < rb : a < b;
  });
  cur.rank.assign(cur.size(), 0);
  for (std::size_t p = 0; p < idx.size(); ++p) cur.rank[idx[p]] = static_cast<std::uint32_t>(p);
}

Level level_zero(const FreeModule& F0) {
  Level L;
  for (std::size_t k = 0; k < F0.rank(); ++k) {
    L.lead.push_back(Monomial{});
    L.lead_comp.push_back(static_cast<std::uint32_t>(k));
    L.total.push_back(Monomial{});
    L.comp0.push_back(static_cast<std::uint32_t>(k));
    L.degree.push_back(F0.shift(k));
    L.rank.push_back(0);
  }
  return L;
}

Level level_one(const FreeModule& F0, std::vector<TermList> gb, const Level& zero) {
  std::vector<std::uint32_t> comp;
  std::vector<Monomial> lead;
  for (const auto& g : gb) {
    comp.push_back(g.front().comp);
    lead.push_back(g.front().mono);
  }
  Level L;
  for (auto i : frame_order(comp, lead)) {
    L.lead.push_back(lead[i]);
    L.lead_comp.push_back(comp[i]);
    L.total.push_back(lead[i]);
    L.comp0.push_back(comp[i]);
    L.degree.push_back(F0.degree(gb[i].front()));
    L.vec.push_back(std::move(gb[i]));
  }
  assign_ranks(L, zero);
  return L;
}

/// Next frame level: for each element a, the minimal generators of the
/// monomial ideal (lcm(lead_b, lead_a) / lead_a : b < a with the same lead component).
Level next_frame(const PolyRing& R, const Level& cur, int max_degree) {
  std::vector<std::vector<std::uint32_t>> groups;
  std::vector<std::uint32_t> comp;
  std::vector<Monomial> lead;
  std::uint32_t max_comp = 0;
  for (auto c : cur.lead_comp) max_comp = std::max(max_comp, c + 1);
  groups.resize(max_comp);
  for (std::uint32_t a = 0; a < cur.size(); ++a) {
    auto& g = groups[cur.lead_comp[a]];
    std::vector<Monomial> qs;
    for (auto b : g) qs.push_back(R.lcm(cur.lead[a], cur.lead[b]) / cur.lead[a]);
    g.push_back(a);
    std::sort(qs.begin(), qs.end(), [](const Monomial& x, const Monomial& y) { return x.degree() < y.degree(); });
    std::vector<Monomial> mins;
    for (const auto& q : qs) {
      bool redundant = false;
      for (const auto& m : mins)
        if (m.divides(q)) {
          redundant = true;
          break;
        }
      if (!redundant) mins.push_back(q);
    }
    for (const auto& q : mins) {
      if (max_degree >= 0 && q.degree() + cur.degree[a] > max_degree) continue;
      comp.push_back(a);
      lead.push_back(q);
    }
  }
  Level L;
  for (auto i : frame_order(comp, lead)) {
    L.lead.push_back(lead[i]);
    L.lead_comp.push_back(comp[i]);
    L.total.push_back(lead[i] * cur.total[comp[i]]);
    L.comp0.push_back(cur.comp0[comp[i]]);
    L.degree.push_back(lead[i].degree() + cur.degree[comp[i]]);
  }
  assign_ranks(L, cur);
  return L;
}

/// Fills next.vec: each syzygy is its leading term plus the quotients of
/// reducing lead * d(e_a) to zero by the elements of `cur`.
void fill_syzygies(const FreeModule& F0, const Level& prev, const Level& cur, Level& next) {
  const PrimeField& k = F0.field();
  std::vector<std::vector<std::uint32_t>> by_comp(prev.size());
  for (std::uint32_t b = 0; b < cur.size(); ++b) by_comp[cur.lead_comp[b]].push_back(b);
  SchreyerCmp cmp_prev{&F0, &prev};
  SchreyerCmp cmp_cur{&F0, &cur};
  next.vec.resize(next.size());
  for (std::size_t e = 0; e < next.size(); ++e) {
    const std::uint32_t a = next.lead_comp[e];
    TermList w = cur.vec[a];
    for (auto& t : w) t.mono = next.lead[e] * t.mono;
    TermList sigma{{next.lead[e], a, 1}};
    check_deadline();
    while (!w.empty()) {
      const Term t = w.front();
      long found = -1;
      for (auto b : by_comp[t.comp])
        if (cur.lead[b].divides(t.mono)) {
          found = b;
          break;
        }
      if (found < 0) throw std::logic_error("schreyer: leading term not reducible");
      auto b = static_cast<std::uint32_t>(found);
      Monomial q = t.mono / cur.lead[b];
      w = terms::sub_mul(w, t.coef, q, cur.vec[b], k, cmp_prev);
      sigma.push_back({q, b, k.neg(t.coef)});
    }
    terms::canonicalize(sigma, k, cmp_cur);
    if (sigma.empty() || sigma.front().comp != a || sigma.front().mono != next.lead[e])
      throw std::logic_error("schreyer: unexpected leading term");
    next.vec[e] = std::move(sigma);
  }
}

std::int64_t scalar_rank(std::vector<std::vector<Scalar>> m, const PrimeField& k) {
  std::int64_t rank = 0;
  const std::size_t rows = m.size();
  if (!rows) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Scalar inv = k.inv(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (!m[i][c]) continue;
      Scalar f = k.mul(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j]) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

namespace {
std::mutex g_audit_mutex;
std::shared_ptr<const ResolutionAudit> g_audit;

std::shared_ptr<const ResolutionAudit> audit_hook() {
  std::lock_guard<std::mutex> lock(g_audit_mutex);
  return g_audit;
}
}  // namespace

void set_resolution_audit(ResolutionAudit hook) {
  std::lock_guard<std::mutex> lock(g_audit_mutex);
  g_audit = hook ? std::make_shared<const ResolutionAudit>(std::move(hook)) : nullptr;
}

int FreeResolution::length() const {
  for (int i = static_cast<int>(degrees.size()) - 1; i >= 0; --i)
    if (!degrees[i].empty()) return i;
  return -1;
}

FreeResolution schreyer_resolution(const GradedModule& M, const ResolutionOptions& opts) {
  M.validate();
  const int n = static_cast<int>(M.ring->nvars());
  const int max_length = opts.max_length < 0 ? n : opts.max_length;
  FreeModule F0 = M.free();
  FreeResolution res;
  res.ring = M.ring;
  res.max_degree = opts.max_degree;
  res.degrees.push_back(M.degrees);

  GBOptions gopts;
  gopts.degree_limit = opts.max_degree;
  GBasis gb = cached_groebner(F0, M.all_relations(), gopts);

  std::vector<Level> levels;
  levels.push_back(level_zero(F0));
  levels.push_back(level_one(F0, gb.elements, levels[0]));
  bool ended = levels.back().size() == 0;
  while (static_cast<int>(levels.size()) <= max_length + 1 && levels.back().size() > 0) {
    Level next = next_frame(*M.ring, levels.back(), opts.max_degree);
    if (next.size() == 0) {
      ended = true;
      break;
    }
    check_rank(next.size(), "a syzygy module");
    fill_syzygies(F0, levels[levels.size() - 2], levels.back(), next);
    levels.push_back(std::move(next));
  }

  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].size() == 0) break;
    res.degrees.push_back(levels[i].degree);
    FreeModule target = res.free_module(i - 1);
    std::vector<TermList> cols = std::move(levels[i].vec);
    for (auto& c : cols) target.canonicalize(c);
    res.maps.push_back(std::move(cols));
  }
  if (auto hook = audit_hook()) {
    thread_local bool inside = false;
    if (!inside) {
      inside = true;
      try {
        (*hook)(M, res, opts.max_degree < 0 && (ended || max_length >= n));
      } catch (...) {
        inside = false;
        throw;
      }
      inside = false;
    }
  }
  return res;
}

void prune(FreeResolution& res) {
  const PrimeField& k = res.ring->field();
  const std::size_t L = res.maps.size();
  std::vector<std::vector<char>> alive(res.degrees.size());
  for (std::size_t i = 0; i < res.degrees.size(); ++i) alive[i].assign(res.degrees[i].size(), 1);
  // rows[m][r]: columns of maps[m] that may have an entry in row r
  std::vector<std::vector<std::vector<std::uint32_t>>> rows(L);
  for (std::size_t m = 0; m < L; ++m) {
    rows[m].resize(res.degrees[m].size());
    for (std::uint32_t j = 0; j < res.maps[m].size(); ++j)
      for (const auto& t : res.maps[m][j])
        if (rows[m][t.comp].empty() || rows[m][t.comp].back() != j) rows[m][t.comp].push_back(j);
  }

  for (std::size_t m = 0; m < L; ++m) {
    FreeModule F = res.free_module(m);
    auto& cols = res.maps[m];
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::uint32_t c = 0; c < cols.size(); ++c) {
        if (!alive[m + 1][c]) continue;
        const Term* unit = nullptr;
        for (const auto& t : cols[c])
          if (t.mono.is_one()) {
            unit = &t;
            break;
          }
        if (!unit) continue;
        const std::uint32_t r = unit->comp;
        const Scalar uinv = k.inv(unit->coef);
        const TermList pc = cols[c];
        std::vector<std::uint32_t> touched = rows[m][r];
        for (auto j : touched) {
          if (j == c || !alive[m + 1][j]) continue;
          TermList in_row;
          for (const auto& t : cols[j])
            if (t.comp == r) in_row.push_back(t);
          if (in_row.empty()) continue;
          for (const auto& t : in_row) cols[j] = F.sub_mul(cols[j], k.mul(t.coef, uinv), t.mono, pc);
          for (const auto& t : pc) rows[m][t.comp].push_back(j);
        }
        alive[m + 1][c] = 0;
        cols[c].clear();
        alive[m][r] = 0;
        if (m >= 1) res.maps[m - 1][r].clear();
        if (m + 1 < L)
          for (auto j : rows[m + 1][c])
            std::erase_if(res.maps[m + 1][j], [c](const Term& t) { return t.comp == c; });
        progress = true;
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> index(res.degrees.size());
  for (std::size_t i = 0; i < res.degrees.size(); ++i) {
    index[i].assign(res.degrees[i].size(), 0);
    std::vector<int> kept;
    for (std::size_t j = 0; j < res.degrees[i].size(); ++j)
      if (alive[i][j]) {
        index[i][j] = static_cast<std::uint32_t>(kept.size());
        kept.push_back(res.degrees[i][j]);
      }
    res.degrees[i] = std::move(kept);
  }
  for (std::size_t m = 0; m < L; ++m) {
    std::vector<TermList> kept;
    for (std::size_t j = 0; j < res.maps[m].size(); ++j) {
      if (!alive[m + 1][j]) continue;
      TermList v = std::move(res.maps[m][j]);
      for (auto& t : v) t.comp = index[m][t.comp];
      kept.push_back(std::move(v));
    }
    res.maps[m] = std::move(kept);
  }
  while (!res.degrees.empty() && res.degrees.size() > 1 && res.degrees.back().empty()) {
    res.degrees.pop_back();
    if (!res.maps.empty()) res.maps.pop_back();
  }
}

FreeResolution minimal_free_resolution(const GradedModule& M, const ResolutionOptions& opts) {
  const int n = static_cast<int>(M.ring->nvars());
  const int max_length = opts.max_length < 0 ? n : opts.max_length;
  FreeResolution res = schreyer_resolution(M, opts);
  prune(res);
  while (static_cast<int>(res.degrees.size()) > max_length + 1) {
    res.degrees.pop_back();
    res.maps.pop_back();
  }
  return res;
}

void BettiTable::add(int i, int j, std::int64_t v) {
  if (!v) return;
  auto& slot = entries_[{i, j}];
  slot += v;
  if (!slot) entries_.erase({i, j});
}

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t s = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) s += v;
  return s;
}

int BettiTable::length() const {
  int l = -1;
  for (const auto& [key, v] : entries_) l = std::max(l, key.first);
  return l;
}

TPoly BettiTable::alternating_sum() const {
  TPoly p;
  for (const auto& [key, v] : entries_) p += TPoly::monomial(key.second, key.first % 2 ? -v : v);
  return p;
}

std::string BettiTable::to_text() const {
  if (entries_.empty()) return "       0\ntotal: 0\n";
  const int len = length();
  int lo = 1 << 30, hi = -(1 << 30);
  for (const auto& [key, v] : entries_) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::vector<std::size_t> width(len + 1);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header, totals;
  for (int i = 0; i <= len; ++i) {
    header.push_back(std::to_string(i));
    totals.push_back(std::to_string(total(i)));
  }
  for (int s = lo; s <= hi; ++s) {
    std::vector<std::string> row;
    for (int i = 0; i <= len; ++i) {
      auto v = at(i, i + s);
      row.push_back(v ? std::to_string(v) : ".");
    }
    cells.push_back(row);
  }
  for (int i = 0; i <= len; ++i) {
    width[i] = std::max(header[i].size(), totals[i].size());
    for (const auto& row : cells) width[i] = std::max(width[i], row[i].size());
  }
  std::size_t label = 6;
  for (int s = lo; s <= hi; ++s) label = std::max(label, std::to_string(s).size() + 1);
  auto pad = [](const std::string& x, std::size_t w) { return std::string(w - x.size(), ' ') + x; };
  std::ostringstream os;
  auto line = [&](const std::string& name, const std::vector<std::string>& row) {
    std::string out = pad(name, label);
    for (int i = 0; i <= len; ++i) out += " " + pad(row[i], width[i]);
    os << out << '\n';
  };
  line("", header);
  line("total:", totals);
  for (int s = lo; s <= hi; ++s) line(std::to_string(s) + ":", cells[s - lo]);
  return os.str();
}

BettiTable betti_table(const FreeResolution& res) {
  BettiTable b;
  for (std::size_t i = 0; i < res.degrees.size(); ++i)
    for (int d : res.degrees[i]) b.add(static_cast<int>(i), d, 1);
  return b;
}

BettiTable minimal_betti_from_ranks(const FreeResolution& res) {
  const PrimeField& k = res.ring->field();
  // rank of the scalar part of d_i in internal degree j
  std::vector<std::map<int, std::int64_t>> ranks(res.degrees.size() + 1);
  for (std::size_t m = 0; m < res.maps.size(); ++m) {
    std::map<int, std::vector<std::uint32_t>> rows_by_deg, cols_by_deg;
    for (std::uint32_t r = 0; r < res.degrees[m].size(); ++r) rows_by_deg[res.degrees[m][r]].push_back(r);
    for (std::uint32_t c = 0; c < res.degrees[m + 1].size(); ++c) cols_by_deg[res.degrees[m + 1][c]].push_back(c);
    for (const auto& [d, cols] : cols_by_deg) {
      auto it = rows_by_deg.find(d);
      if (it == rows_by_deg.end()) continue;
      std::map<std::uint32_t, std::size_t> row_pos;
      for (std::size_t p = 0; p < it->second.size(); ++p) row_pos[it->second[p]] = p;
      std::vector<std::vector<Scalar>> mat(cols.size(), std::vector<Scalar>(it->second.size(), 0));
      bool any = false;
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& t : res.maps[m][cols[c]])
          if (t.mono.is_one()) {
            mat[c][row_pos.at(t.comp)] = t.coef;
            any = true;
          }
      if (any) ranks[m + 1][d] = scalar_rank(std::move(mat), k);
    }
  }
  BettiTable b;
  for (std::size_t i = 0; i < res.degrees.size(); ++i) {
    std::map<int, std::int64_t> count;
    for (int d : res.degrees[i]) ++count[d];
    for (const auto& [d, c] : count) {
      std::int64_t v = c;
      if (auto it = ranks[i].find(d); it != ranks[i].end()) v -= it->second;
      if (auto it = ranks[i + 1].find(d); it != ranks[i + 1].end()) v -= it->second;
      b.add(static_cast<int>(i), d, v);
    }
  }
  return b;
}

bool composes_to_zero(const FreeResolution& res) {
  for (std::size_t m = 1; m < res.maps.size(); ++m) {
    FreeModule target = res.free_module(m - 1);
    for (const auto& col : res.maps[m])
      if (!apply_map(target, res.maps[m - 1], col).empty()) return false;
  }
  return true;
}

bool is_minimal(const FreeResolution& res) {
  for (const auto& cols : res.maps)
    for (const auto& c : cols)
      for (const auto& t : c)
        if (t.mono.is_one()) return false;
  return true;
}

GradedModule minimal_presentation(const GradedModule& M) {
  ResolutionOptions opts;
  opts.max_length = 1;
  FreeResolution res = minimal_free_resolution(M, opts);
  GradedModule out{M.ring, res.degrees[0], {}, M.ambient};
  if (!res.maps.empty()) out.relations = res.maps[0];
  return out;
}

DepthInfo depth_pd(const GradedModule& M) {
  if (is_zero_module(M)) throw std::invalid_argument("depth_pd: zero module");
  DepthInfo info;
  FreeResolution res = minimal_free_resolution(M);
  info.projective_dimension = res.length();
  info.depth = static_cast<int>(M.ring->nvars()) - info.projective_dimension;
  info.dimension = module_hilbert(M).dimension;
  info.cohen_macaulay = info.depth == info.dimension;
  return info;
}

LinearityReport linearity_check(const BettiTable& betti) {
  int delta = 0;
  bool seen = false;
  for (const auto& [key, v] : betti.entries())
    if (key.first == 0) {
      if (seen && key.second != delta) throw std::invalid_argument("linearity_check: generators in several degrees");
      delta = key.second;
      seen = true;
    }
  if (!seen) throw std::invalid_argument("linearity_check: zero module");
  LinearityReport r;
  for (const auto& [key, v] : betti.entries())
    if (key.second != delta + key.first && (r.first_nonlinear_step < 0 || key.first < r.first_nonlinear_step))
      r.first_nonlinear_step = key.first;
  r.resolution = r.first_nonlinear_step < 0;
  r.presentation = r.first_nonlinear_step < 0 || r.first_nonlinear_step > 1;
  return r;
}

}  // namespace resint
