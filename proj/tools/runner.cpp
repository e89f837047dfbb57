#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <thread>

#include "resint/budget.hpp"
#include "resint/field.hpp"
#include "resint/gb_cache.hpp"
#include "resint/parse.hpp"
#include "resint/residual.hpp"
#include "resint/version.hpp"

namespace resint::runner {

namespace {

using Clock = std::chrono::steady_clock;

// ---- schema helpers

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

void allow_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) schema_fail(where, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* a : keys) ok = ok || k == a;
    if (!ok) schema_fail(where, "unknown field \"" + k + "\"");
  }
}

std::int64_t get_int(const Json& obj, const char* key, const std::string& where, std::optional<std::int64_t> def = {}) {
  if (!obj.contains(key)) {
    if (def) return *def;
    schema_fail(where, std::string("missing field \"") + key + "\"");
  }
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) schema_fail(where + "/" + key, "expected an integer");
  return v.get<std::int64_t>();
}

bool get_bool(const Json& obj, const char* key, const std::string& where, bool def) {
  if (!obj.contains(key)) return def;
  if (!obj.at(key).is_boolean()) schema_fail(where + "/" + key, "expected true or false");
  return obj.at(key).get<bool>();
}

std::string get_string(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_string()) schema_fail(where, std::string("expected string field \"") + key + "\"");
  return obj.at(key).get<std::string>();
}

std::vector<int> int_list(const Json& v, const std::string& where) {
  std::vector<int> out;
  if (v.is_number_integer()) return {v.get<int>()};
  if (!v.is_array()) schema_fail(where, "expected an integer or a list of integers");
  for (const auto& x : v) {
    if (!x.is_number_integer()) schema_fail(where, "expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

void validate(const Json& doc) {
  allow_keys(doc, "scenario",
             {"schema", "name", "description", "characteristic", "seed", "ideal", "pipeline", "budget", "expected"});
  if (get_int(doc, "schema", "scenario") != kScenarioSchema)
    schema_fail("scenario/schema", "unsupported version (expected " + std::to_string(kScenarioSchema) + ")");
  get_string(doc, "name", "scenario");
  if (get_int(doc, "seed", "scenario") < 0) schema_fail("scenario/seed", "must be non-negative");
  const auto p = get_int(doc, "characteristic", "scenario", 101);
  if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p)))
    schema_fail("scenario/characteristic", std::to_string(p) + " is not a prime below 65536");

  if (!doc.contains("ideal")) schema_fail("scenario", "missing field \"ideal\"");
  const Json& id = doc["ideal"];
  const std::string kind = get_string(id, "kind", "ideal");
  if (kind == "generic_matrix") {
    allow_keys(id, "ideal", {"kind", "rows", "cols", "minors"});
    get_int(id, "rows", "ideal");
    get_int(id, "cols", "ideal");
  } else if (kind == "custom_matrix") {
    allow_keys(id, "ideal", {"kind", "variables", "matrix", "minors"});
    get_string(id, "matrix", "ideal");
  } else if (kind == "monomials" || kind == "polynomials") {
    allow_keys(id, "ideal", {"kind", "variables", "generators"});
    get_string(id, "generators", "ideal");
  } else if (kind == "truncation") {
    allow_keys(id, "ideal", {"kind", "variables", "generators", "degree"});
    get_string(id, "generators", "ideal");
    get_int(id, "degree", "ideal");
  } else {
    schema_fail("ideal/kind", "unknown constructor \"" + kind + "\"");
  }
  if (kind != "generic_matrix") {
    if (!id.contains("variables") || !id["variables"].is_array() || id["variables"].empty())
      schema_fail("ideal", "expected a nonempty \"variables\" list");
    for (const auto& v : id["variables"])
      if (!v.is_string()) schema_fail("ideal/variables", "expected strings");
  }

  if (doc.contains("pipeline")) {
    const Json& pl = doc["pipeline"];
    allow_keys(pl, "pipeline", {"decomposition", "analytic_spread", "reduction_number", "betti", "residual"});
    if (pl.contains("reduction_number") && !pl["reduction_number"].is_boolean())
      allow_keys(pl["reduction_number"], "pipeline/reduction_number", {"r_max", "retries"});
    if (pl.contains("betti"))
      for (int k : int_list(pl["betti"], "pipeline/betti"))
        if (k < 1) schema_fail("pipeline/betti", "powers start at 1");
    if (pl.contains("residual")) {
      const Json& rs = pl["residual"];
      allow_keys(rs, "pipeline/residual",
                 {"s", "retries", "saturate", "ring_checks", "stable_module", "self_duality", "powers"});
      if (!rs.contains("s")) schema_fail("pipeline/residual", "missing field \"s\"");
      int_list(rs["s"], "pipeline/residual/s");
      if (rs.contains("stable_module") && !rs["stable_module"].is_boolean())
        allow_keys(rs["stable_module"], "pipeline/residual/stable_module", {"rho", "rho_max", "verify"});
      if (rs.contains("self_duality") && !rs["self_duality"].is_boolean())
        allow_keys(rs["self_duality"], "pipeline/residual/self_duality",
                   {"omega_shift", "trials", "endomorphisms", "conductor"});
      if (rs.contains("powers")) {
        allow_keys(rs["powers"], "pipeline/residual/powers", {"from", "to", "to_r_plus", "trials"});
        if (rs["powers"].contains("to") == rs["powers"].contains("to_r_plus"))
          schema_fail("pipeline/residual/powers", "give exactly one of \"to\" and \"to_r_plus\"");
      }
    }
  }
  if (doc.contains("budget")) allow_keys(doc["budget"], "budget", {"wall_seconds", "max_degree", "max_rank"});
  if (doc.contains("expected") && !doc["expected"].is_object()) schema_fail("expected", "expected an object");
}

// ---- JSON views of results

const Json* lookup(const Json& root, const std::string& path) {
  const Json* cur = &root;
  std::size_t pos = 0;
  while (pos <= path.size()) {
    std::size_t next = path.find('/', pos);
    if (next == std::string::npos) next = path.size();
    std::string key = path.substr(pos, next - pos);
    if (!cur->is_object() || !cur->contains(key)) return nullptr;
    cur = &(*cur)[key];
    pos = next + 1;
  }
  return cur;
}

Json ring_report(const Ideal& K) {
  Json out;
  GradedModule R = GradedModule::quotient(K);
  FreeResolution res = minimal_free_resolution(R);
  BettiTable b = betti_table(res);
  const int n = static_cast<int>(K.ring()->nvars());
  const int pd = b.length();
  const int dim = dimension(K);
  out["dim"] = dim;
  out["pd"] = pd;
  out["depth"] = n - pd;
  out["cm"] = n - pd == dim;
  // for a CM quotient the last Betti number counts the generators of omega
  if (n - pd == dim) {
    out["type"] = b.total(pd);
    out["gorenstein"] = b.total(pd) == 1;
  } else {
    out["gorenstein"] = false;
  }
  out["betti"] = betti_to_json(b);
  return out;
}

std::string degree_list(const std::vector<int>& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d[i];
  return os.str();
}

// ---- scenario execution

struct Context {
  std::uint64_t seed = 0;
  std::uint32_t p = 101;
  Budget budget;
  int jobs = 1;
  Ideal I;
  ScenarioRing sr;
  Json invariants = Json::object();
  Json stages = Json::object();
  Json timings = Json::object();
  Json errors = Json::array();
  bool budget_hit = false;
};

// Runs `body`, recording its outcome under `name`. Returns false when it did not finish.
bool stage(Context& cx, const std::string& name, const std::function<void()>& body) {
  const auto t0 = Clock::now();
  bool ok = false;
  try {
    BudgetGuard guard(cx.budget);
    body();
    cx.stages[name] = "done";
    ok = true;
  } catch (const BudgetExceeded& e) {
    cx.stages[name] = std::string("skipped: budget (") + e.what() + ")";
    cx.budget_hit = true;
  } catch (const std::exception& e) {
    cx.stages[name] = "error";
    cx.errors.push_back(Json{{"stage", name}, {"message", e.what()}});
  }
  cx.timings[name] = std::chrono::duration<double>(Clock::now() - t0).count();
  return ok;
}

void build_ideal(Context& cx, const Json& id) {
  const std::string kind = id["kind"];
  std::vector<std::string> names;
  if (id.contains("variables"))
    for (const auto& v : id["variables"]) names.push_back(v.get<std::string>());
  try {
    if (kind == "generic_matrix") {
      const int m = static_cast<int>(id["rows"].get<std::int64_t>());
      const int n = static_cast<int>(id["cols"].get<std::int64_t>());
      cx.sr = generic_matrix_ring(m, n, cx.p);
      cx.I = matrix_minors(cx.sr, static_cast<int>(get_int(id, "minors", "ideal", m)));
    } else if (kind == "custom_matrix") {
      auto R = PolyRing::make(cx.p, names);
      cx.sr = custom_matrix_ring(R, parse_matrix(id["matrix"].get<std::string>(), R));
      cx.I = matrix_minors(cx.sr, static_cast<int>(get_int(id, "minors", "ideal", cx.sr.rows)));
    } else {
      auto R = PolyRing::make(cx.p, names);
      cx.sr.ring = R;
      cx.I = Ideal(R, parse_poly_list(id["generators"].get<std::string>(), R));
      if (kind == "monomials")
        for (const auto& g : cx.I.generators())
          if (g.size() != 1) schema_fail("ideal/generators", "\"" + g.to_string() + "\" is not a monomial");
      if (kind == "truncation") cx.I = truncate_ideal(cx.I, static_cast<int>(id["degree"].get<std::int64_t>()));
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    schema_fail("ideal", e.what());
  }
  if (!cx.I.is_homogeneous()) schema_fail("ideal", "generators must be homogeneous");
}

void ideal_stage(Context& cx, bool decomposition) {
  Json out;
  out["variables"] = cx.I.ring()->nvars();
  out["generators"] = cx.I.size();
  out["degrees"] = cx.I.degrees();
  const int d = cx.I.single_degree();
  out["delta"] = d >= 0 ? Json(d) : Json(nullptr);
  out["codim"] = codimension(cx.I);
  out["dim"] = dimension(cx.I);
  out["degree"] = degree(cx.I);
  if (decomposition) {
    auto comps = monomial_irreducible_decomposition(cx.I);
    Json codims = Json::array();
    for (const auto& c : comps) codims.push_back(codimension(c));
    out["components"] = comps.size();
    out["component_codims"] = codims;
    out["unmixed"] = is_unmixed_monomial(cx.I);
  }
  cx.invariants["ideal"] = out;
}

Json betti_stage(const Ideal& I, int k) {
  Ideal P = k == 1 ? I : ideal_power(I, static_cast<unsigned>(k));
  auto res = schreyer_resolution(GradedModule::quotient(P));
  BettiTable b = minimal_betti_from_ranks(res);
  return betti_to_json(b);
}

// One residual intersection run; fills `out` and records sub-stages in `sub`.
void residual_run(Context& cx, const Json& rs, int s, Json& out, Context& sub) {
  const std::string key = std::to_string(s);
  std::optional<PipelineState> st;
  if (!stage(sub, key + "/residual", [&] {
        ResidualOptions ro;
        ro.retries = static_cast<int>(get_int(rs, "retries", "pipeline/residual", 3));
        ro.saturate = get_bool(rs, "saturate", "pipeline/residual", true);
        st = residual_intersection(cx.I, s, cx.seed, ro);
        out["s"] = s;
        out["seed"] = st->seed;
        out["attempts"] = st->attempts;
        out["codim_I"] = st->codim_I;
        out["codim_K"] = st->codim_K;
        out["codim_I_plus_K"] = st->codim_I_plus_K;
        out["residual"] = st->residual;
        out["geometric"] = st->geometric;
        out["degree_K"] = degree(st->K);
        out["K_generators"] = degree_list(st->K.minimalized().degrees());
        if (ro.saturate) {
          out["epsilon"] = st->epsilon;
          out["H_equals_K"] = st->H.same_as(st->K);
          out["codim_H"] = codimension(st->H);
          out["K_saturated"] = saturate(st->K, maximal_ideal(st->K.ring())).exponent == 0;
        }
      }))
    return;
  if (cx.invariants.contains("ell")) st->ell = cx.invariants["ell"].get<int>();
  if (cx.invariants.contains("r")) st->r = cx.invariants["r"].get<int>();

  if (rs.contains("stable_module") && rs["stable_module"] != false) {
    const Json sm = rs["stable_module"].is_object() ? rs["stable_module"] : Json::object();
    stage(sub, key + "/stable_module", [&] {
      std::optional<int> rho, rho_max;
      if (sm.contains("rho")) rho = sm["rho"].get<int>();
      if (sm.contains("rho_max")) rho_max = sm["rho_max"].get<int>();
      const bool verify = get_bool(sm, "verify", "stable_module", true);
      stable_power_module(*st, rho, verify, rho_max);
      Json m;
      m["rho"] = st->rho;
      if (verify) m["stabilization_index"] = st->stabilization_index;
      GradedModule mp = minimal_presentation(*st->M);
      m["generators"] = mp.degrees;
      BettiTable b = module_betti(mp);
      auto lin = linearity_check(b);
      m["linear_presentation"] = lin.presentation;
      m["linear_resolution"] = lin.resolution;
      m["betti"] = betti_to_json(b);
      out["M"] = m;
    });
  }

  if (st->M && rs.contains("self_duality") && rs["self_duality"] != false) {
    const Json sd = rs["self_duality"].is_object() ? rs["self_duality"] : Json::object();
    stage(sub, key + "/self_duality", [&] {
      SelfDualityOptions so;
      so.trials = static_cast<int>(get_int(sd, "trials", "self_duality", 8));
      so.endomorphisms = get_bool(sd, "endomorphisms", "self_duality", true);
      so.conductor = get_bool(sd, "conductor", "self_duality", true);
      if (sd.contains("omega_shift")) so.omega_shift = sd["omega_shift"].get<int>();
      Json checks = Json::object(), details = Json::object();
      for (const auto& c : self_duality_report(*st, so, cx.seed)) {
        checks[c.name] = to_string(c.status);
        if (c.status == CheckStatus::Skipped) sub.budget_hit = true;
        if (!c.detail.empty()) details[c.name] = c.detail;
      }
      out["checks"] = checks;
      out["check_details"] = details;
    });
  }

  if (get_bool(rs, "ring_checks", "pipeline/residual", false)) {
    stage(sub, key + "/R", [&] { out["R"] = ring_report(st->K); });
    if (out.value("H_equals_K", false)) {
      if (out.contains("R")) out["Rbar"] = out["R"];
    } else if (out.contains("epsilon")) {
      stage(sub, key + "/Rbar", [&] { out["Rbar"] = ring_report(st->H); });
    }
  }

  if (rs.contains("powers")) {
    const Json& pw = rs["powers"];
    stage(sub, key + "/powers", [&] {
      const int from = static_cast<int>(get_int(pw, "from", "powers", 1));
      int to;
      if (pw.contains("to")) {
        to = pw["to"].get<int>();
      } else {
        if (st->r < 0) throw std::runtime_error("reduction number needed for \"to_r_plus\"");
        to = st->r + pw["to_r_plus"].get<int>();
      }
      const int trials = static_cast<int>(get_int(pw, "trials", "powers", 8));
      GradedModule omega = canonical_module(st->K);
      out["omega"] = Json{{"generators", minimal_presentation(omega).degrees}};
      Json verdicts = Json::object();
      std::string found = "none found";
      bool open = false;
      for (int rho = from; rho <= to; ++rho) {
        GradedModule Mr = power_quotient_module(st->I, st->J, rho);
        GradedModule dual = hom_module(Mr, omega).module;
        auto r = iso_up_to_shift(dual, Mr, trials, cx.seed + static_cast<std::uint64_t>(rho));
        verdicts[std::to_string(rho)] = Json{{"verdict", to_string(r.iso.verdict)}, {"shift", r.shift}, {"reason", r.iso.reason}};
        if (r.iso.verdict == IsoVerdict::Isomorphic && found == "none found") found = "rho=" + std::to_string(rho);
        if (r.iso.verdict == IsoVerdict::Unknown) open = true;
      }
      out["powers"] = verdicts;
      out["self_dual_power"] = found == "none found" && open ? "inconclusive" : found;
    });
  }
}

// Runs fn(0..n-1) on up to `jobs` threads.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(jobs, static_cast<int>(n)); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

// ---- expected values

bool is_betti_text(const Json& v) { return v.is_string() && v.get<std::string>().find("total:") != std::string::npos; }

struct Verdict {
  std::string status;
  std::string detail;
};

Verdict compare(const Json& expected, const Json& computed) {
  if (computed.is_string() && computed == "unknown" && expected != "unknown") return {"unknown", ""};
  if (computed.is_string() && computed == "skipped") return {"skipped", "budget"};
  if (is_betti_text(expected)) {
    BettiTable want = parse_betti_text(expected.get<std::string>());
    BettiTable got;
    if (computed.is_object() && computed.contains("entries"))
      got = betti_from_json(computed);
    else if (is_betti_text(computed))
      got = parse_betti_text(computed.get<std::string>());
    else
      return {"fail", "not a Betti table"};
    if (want == got) return {"pass", ""};
    std::ostringstream os;
    for (const auto& [k, v] : want.entries())
      if (got.at(k.first, k.second) != v)
        os << " beta(" << k.first << "," << k.second << ")=" << got.at(k.first, k.second) << " want " << v << ";";
    for (const auto& [k, v] : got.entries())
      if (want.at(k.first, k.second) == 0) os << " extra beta(" << k.first << "," << k.second << ")=" << v << ";";
    return {"fail", os.str()};
  }
  if (expected.is_object() && (expected.contains("min") || expected.contains("max") || expected.contains("one_of"))) {
    if (expected.contains("one_of")) {
      for (const auto& c : expected["one_of"])
        if (c == computed) return {"pass", ""};
      return {"fail", ""};
    }
    if (!computed.is_number()) return {"fail", "not a number"};
    const double x = computed.get<double>();
    if (expected.contains("min") && x < expected["min"].get<double>()) return {"fail", "below minimum"};
    if (expected.contains("max") && x > expected["max"].get<double>()) return {"fail", "above maximum"};
    return {"pass", ""};
  }
  return expected == computed ? Verdict{"pass", ""} : Verdict{"fail", ""};
}

bool heuristic_path(const std::string& path) { return path == "r" || path.rfind("runs/", 0) == 0; }

}  // namespace

// ---- public API

Scenario parse_scenario(const Json& doc) {
  validate(doc);
  return {doc, doc["name"].get<std::string>()};
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path.string() + ": cannot open");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
  try {
    return parse_scenario(doc);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

Json run_scenario(const Scenario& sc_in, const RunOptions& opts) {
  Json doc = sc_in.doc;
  if (opts.seed) doc["seed"] = *opts.seed;
  if (opts.characteristic) doc["characteristic"] = *opts.characteristic;
  validate(doc);

  const auto t_start = Clock::now();
  Context cx;
  cx.seed = doc["seed"].get<std::uint64_t>();
  cx.p = static_cast<std::uint32_t>(get_int(doc, "characteristic", "scenario", 101));
  cx.jobs = std::max(1, opts.jobs);
  const Json budget = doc.value("budget", Json::object());
  std::optional<double> wall;
  if (budget.contains("wall_seconds")) wall = budget["wall_seconds"].get<double>();
  if (opts.max_seconds) wall = wall ? std::min(*wall, *opts.max_seconds) : *opts.max_seconds;
  if (wall) cx.budget.deadline = t_start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*wall));
  if (budget.contains("max_rank")) cx.budget.max_rank = budget["max_rank"].get<std::size_t>();
  const int max_degree = budget.contains("max_degree") ? budget["max_degree"].get<int>() : -1;

  auto cache = global_gb_cache();
  GBCache::Stats before;
  if (cache) before = cache->stats();

  build_ideal(cx, doc["ideal"]);
  const Json pl = doc.value("pipeline", Json::object());

  stage(cx, "ideal", [&] {
    if (max_degree >= 0 && cx.I.single_degree() > max_degree) throw BudgetExceeded("generator degree");
    ideal_stage(cx, get_bool(pl, "decomposition", "pipeline", false));
  });

  if (get_bool(pl, "analytic_spread", "pipeline", false) || pl.contains("reduction_number")) {
    stage(cx, "analytic_spread", [&] { cx.invariants["ell"] = analytic_spread(cx.I); });
  }
  if (pl.contains("reduction_number") && pl["reduction_number"] != false && cx.invariants.contains("ell")) {
    const Json rn = pl["reduction_number"].is_object() ? pl["reduction_number"] : Json::object();
    stage(cx, "reduction_number", [&] {
      auto red = reduction_number(cx.I, cx.invariants["ell"].get<int>(), cx.seed,
                                  static_cast<int>(get_int(rn, "r_max", "reduction_number", 6)),
                                  static_cast<int>(get_int(rn, "retries", "reduction_number", 3)));
      cx.invariants["r"] = red.r;
      cx.invariants["reduction"] = Json{{"seed", red.seed}, {"attempts", red.attempts}};
    });
  }

  // Betti tables and residual runs are independent of each other.
  std::vector<int> powers = pl.contains("betti") ? int_list(pl["betti"], "pipeline/betti") : std::vector<int>{};
  std::vector<int> ss;
  Json rs = Json::object();
  if (pl.contains("residual")) {
    rs = pl["residual"];
    ss = int_list(rs["s"], "pipeline/residual/s");
  }
  const std::size_t tasks = powers.size() + ss.size();
  std::vector<Context> subs(tasks);
  std::vector<Json> results(tasks, Json::object());
  for (auto& s : subs) s.budget = cx.budget;
  parallel_for(tasks, cx.jobs, [&](std::size_t t) {
    Context& sub = subs[t];
    if (t < powers.size()) {
      const int k = powers[t];
      stage(sub, "betti/" + std::to_string(k), [&] {
        if (max_degree >= 0 && cx.I.single_degree() * k > max_degree) throw BudgetExceeded("degree cap");
        results[t] = betti_stage(cx.I, k);
      });
    } else {
      residual_run(cx, rs, ss[t - powers.size()], results[t], sub);
    }
  });

  for (std::size_t t = 0; t < tasks; ++t) {
    const Context& sub = subs[t];
    for (const auto& [k, v] : sub.stages.items()) cx.stages[k] = v;
    for (const auto& [k, v] : sub.timings.items()) cx.timings[k] = v;
    for (const auto& e : sub.errors) cx.errors.push_back(e);
    cx.budget_hit = cx.budget_hit || sub.budget_hit;
    if (t < powers.size()) {
      if (!results[t].empty()) {
        const int k = powers[t];
        cx.invariants["betti"][std::to_string(k)] = results[t];
      }
    } else {
      cx.invariants["runs"][std::to_string(ss[t - powers.size()])] = results[t];
    }
  }

  // Compare expected values.
  Json checks = Json::array();
  int n_pass = 0, n_fail = 0, n_unknown = 0, n_skipped = 0;
  const Json expected = doc.value("expected", Json::object());
  for (const auto& [path, want] : expected.items()) {
    Json c;
    c["name"] = path;
    c["expected"] = want;
    const Json* got = lookup(cx.invariants, path);
    Verdict v;
    if (!got) {
      v = cx.budget_hit ? Verdict{"skipped", "budget"} : Verdict{"fail", "not computed"};
      c["computed"] = nullptr;
    } else {
      c["computed"] = (got->is_object() && got->contains("text")) ? (*got)["text"] : *got;
      v = compare(want, *got);
    }
    c["status"] = v.status;
    if (!v.detail.empty()) c["detail"] = v.detail;
    if (heuristic_path(path)) c["label"] = "heuristic in char p";
    if (v.status == "pass") ++n_pass;
    else if (v.status == "fail") ++n_fail;
    else if (v.status == "unknown") ++n_unknown;
    else ++n_skipped;
    checks.push_back(c);
  }

  Json report;
  report["schema"] = kScenarioSchema;
  report["tool"] = "resint";
  report["version"] = kToolVersion;
  report["scenario"] = doc;
  report["characteristic"] = cx.p;
  report["seed"] = cx.seed;
  report["notes"] = Json::array(
      {"Checks labeled \"heuristic in char p\" depend on seeded general forms or randomized isomorphism probes over "
       "F_p; they stand in for statements made over an infinite field of characteristic 0."});
  if (doc.contains("pipeline") && doc["pipeline"].contains("residual"))
    report["notes"].push_back(
        "For K = J : I only codimension, degree and saturatedness are computed. Whether K is radical (an "
        "intersection of linear primes) and whether R is reduced with an isolated singularity is unverified.");
  report["invariants"] = cx.invariants;
  report["stages"] = cx.stages;
  report["errors"] = cx.errors;
  report["checks"] = checks;
  std::string status = n_fail || n_unknown ? "fail" : n_skipped ? "budget" : "pass";
  report["summary"] = Json{{"pass", n_pass}, {"fail", n_fail}, {"unknown", n_unknown}, {"skipped", n_skipped},
                           {"status", status}};

  Json run;
  run["timings"] = cx.timings;
  run["total_seconds"] = std::chrono::duration<double>(Clock::now() - t_start).count();
  if (cache) {
    auto after = cache->stats();
    run["cache"] = Json{{"dir", cache->dir().string()},
                        {"hits", after.hits - before.hits},
                        {"misses", after.misses - before.misses}};
  } else {
    run["cache"] = nullptr;
  }
  run["jobs"] = cx.jobs;
  report["run"] = run;
  return report;
}

int exit_code(const Json& report) {
  const auto& s = report["summary"];
  if (s["fail"].get<int>() || s["unknown"].get<int>()) return 1;
  if (s["skipped"].get<int>()) return 3;
  return 0;
}

Json report_body(const Json& report) {
  Json body = report;
  body.erase("run");
  return body;
}

std::string summary_text(const Json& report) {
  std::ostringstream os;
  os << report["scenario"]["name"].get<std::string>() << " (p=" << report["characteristic"]
     << ", seed=" << report["seed"] << ")\n";
  for (const auto& c : report["checks"]) {
    os << "  " << c["name"].get<std::string>() << ": " << c["status"].get<std::string>();
    const Json& got = c["computed"];
    if (!got.is_null() && !(got.is_string() && is_betti_text(got))) os << " (computed " << got.dump() << ")";
    if (c.contains("detail")) os << " [" << c["detail"].get<std::string>() << "]";
    if (c.contains("label")) os << " {" << c["label"].get<std::string>() << "}";
    os << '\n';
  }
  for (const auto& [k, v] : report["stages"].items())
    if (v != "done") os << "  stage " << k << ": " << v.get<std::string>() << '\n';
  for (const auto& e : report["errors"])
    os << "  error in " << e["stage"].get<std::string>() << ": " << e["message"].get<std::string>() << '\n';
  const auto& s = report["summary"];
  os << "  => " << s["status"].get<std::string>() << " (" << s["pass"] << " pass, " << s["fail"] << " fail, "
     << s["unknown"] << " unknown, " << s["skipped"] << " skipped)\n";
  return os.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Json betti_to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [k, v] : table.entries()) entries.push_back(Json::array({k.first, k.second, v}));
  Json totals = Json::array();
  for (int i = 0; i <= table.length(); ++i) totals.push_back(table.total(i));
  return Json{{"text", table.to_text()}, {"totals", totals}, {"entries", entries}};
}

BettiTable betti_from_json(const Json& j) {
  BettiTable b;
  for (const auto& e : j.at("entries")) b.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>());
  return b;
}

std::string emit_betti(const BettiTable& table, BettiFormat format) {
  if (format == BettiFormat::PaperText) return table.to_text();
  Json j = betti_to_json(table);
  j.erase("text");
  return j.dump() + "\n";
}

BettiTable parse_betti_text(const std::string& text) {
  static const std::regex prefix(R"(^\s*o\d+\s*=)");
  static const std::regex row(R"(^\s*(-?\d+):(.*)$)");
  BettiTable b;
  std::vector<std::int64_t> totals;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = std::regex_replace(line, prefix, "");
    std::smatch m;
    auto tokens = [](const std::string& s) {
      std::istringstream ts(s);
      std::vector<std::string> out;
      for (std::string t; ts >> t;) out.push_back(t);
      return out;
    };
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line.compare(first, 6, "total:") == 0) {
      for (const auto& t : tokens(line.substr(first + 6))) totals.push_back(std::stoll(t));
    } else if (std::regex_match(line, m, row)) {
      const int strand = std::stoi(m[1]);
      auto cells = tokens(m[2]);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == ".") continue;
        const auto v = std::stoll(cells[i]);
        if (v) b.add(static_cast<int>(i), static_cast<int>(i) + strand, v);
      }
    }
  }
  if (totals.empty()) throw std::invalid_argument("Betti table without a total row");
  const bool empty_table = totals.size() == 1 && totals[0] == 0 && b.entries().empty();
  if (!empty_table)
    for (std::size_t i = 0; i < totals.size(); ++i)
      if (b.total(static_cast<int>(i)) != totals[i])
        throw std::invalid_argument("Betti table total in column " + std::to_string(i) + " disagrees with its rows");
  return b;
}

}  // namespace resint::runner
