#include "resint/gb_cache.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "resint/version.hpp"

namespace fs = std::filesystem;

namespace resint {
namespace {

constexpr const char* kMagic = "resint-gb";

struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void bytes(const void* p, std::size_t n) {
    auto c = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= c[i];
      h *= 1099511628211ull;
    }
  }
  void str(const std::string& s) { bytes(s.data(), s.size()); }
  void num(std::int64_t v) { bytes(&v, sizeof v); }
};

std::string module_line(const FreeModule& F) {
  std::ostringstream os;
  os << (F.kind() == ModuleOrderKind::TermOverPosition ? "top" : "pot") << ' ' << F.rank();
  for (int s : F.shifts()) os << ' ' << s;
  return os.str();
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << v;
  return os.str();
}

void write_terms(std::ostream& os, const TermList& v, std::size_t nvars) {
  os << v.size();
  for (const auto& t : v) {
    os << ' ' << t.comp;
    for (std::size_t i = 0; i < nvars; ++i) os << ' ' << t.mono.exp(i);
    os << ' ' << t.coef;
  }
  os << '\n';
}

std::mutex g_cache_mutex;
std::shared_ptr<GBCache> g_cache;

}  // namespace

std::string gb_fingerprint(const FreeModule& F, const std::vector<TermList>& gens, const GBOptions& opts) {
  Fnv f;
  f.str(F.ring()->describe());
  f.str(module_line(F));
  f.num(opts.degree_limit);
  const std::size_t n = F.ring()->nvars();
  for (const auto& g : gens) {
    f.num(static_cast<std::int64_t>(g.size()));
    for (const auto& t : g) {
      f.num(t.comp);
      for (std::size_t i = 0; i < n; ++i) f.num(t.mono.exp(i));
      f.num(t.coef);
    }
  }
  return hex(f.h);
}

std::string serialize_basis(const GBasis& gb) {
  const FreeModule& F = gb.module;
  const PolyRing& R = *F.ring();
  std::ostringstream os;
  os << kMagic << " 1\n";
  os << "version " << kToolVersion << '\n';
  os << "p " << R.field().characteristic() << '\n';
  os << "vars " << R.nvars();
  for (std::size_t i = 0; i < R.nvars(); ++i) os << ' ' << R.var_name(i) << ':' << R.weight(i);
  os << '\n';
  os << "order " << static_cast<int>(R.order().kind) << ' ' << R.order().block << '\n';
  os << "module " << module_line(F) << '\n';
  os << "limit " << gb.degree_limit << " truncated " << gb.truncated << " homogeneous " << gb.homogeneous << '\n';
  os << "minimal " << gb.minimal_generators.size();
  for (auto i : gb.minimal_generators) os << ' ' << i;
  os << '\n';
  os << "elements " << gb.elements.size() << '\n';
  for (const auto& e : gb.elements) write_terms(os, e, R.nvars());
  return os.str();
}

std::optional<GBasis> deserialize_basis(const std::string& text) {
  std::istringstream is(text);
  auto expect = [&](const std::string& key) {
    std::string k;
    if (!(is >> k) || k != key) throw std::runtime_error("cache entry: expected '" + key + "'");
  };
  std::string magic;
  int format = 0;
  is >> magic >> format;
  if (magic != kMagic || format != 1) throw std::runtime_error("cache entry: bad magic");
  expect("version");
  std::string version;
  is >> version;
  if (version != kToolVersion) return std::nullopt;
  expect("p");
  std::uint32_t p = 0;
  is >> p;
  expect("vars");
  std::size_t n = 0;
  is >> n;
  if (!is || n > kMaxVars) throw std::runtime_error("cache entry: bad variable count");
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 0; i < n; ++i) {
    std::string tok;
    is >> tok;
    auto colon = tok.rfind(':');
    if (colon == std::string::npos) throw std::runtime_error("cache entry: bad variable");
    names.push_back(tok.substr(0, colon));
    weights.push_back(std::stoi(tok.substr(colon + 1)));
  }
  expect("order");
  int kind = 0;
  std::size_t block = 0;
  is >> kind >> block;
  if (kind < 0 || kind > 2) throw std::runtime_error("cache entry: bad order");
  auto ring = PolyRing::make(p, names, MonomialOrder{static_cast<OrderKind>(kind), block}, weights);
  expect("module");
  std::string mkind;
  std::size_t rank = 0;
  is >> mkind >> rank;
  if (!is || rank > (1u << 24)) throw std::runtime_error("cache entry: bad module");
  std::vector<int> shifts(rank);
  for (auto& s : shifts) is >> s;
  FreeModule F(ring, shifts, mkind == "pot" ? ModuleOrderKind::PositionOverTerm : ModuleOrderKind::TermOverPosition);
  GBasis gb;
  gb.module = F;
  expect("limit");
  is >> gb.degree_limit;
  expect("truncated");
  is >> gb.truncated;
  expect("homogeneous");
  is >> gb.homogeneous;
  expect("minimal");
  std::size_t m = 0;
  is >> m;
  gb.minimal_generators.resize(m);
  for (auto& i : gb.minimal_generators) is >> i;
  expect("elements");
  std::size_t count = 0;
  is >> count;
  if (!is) throw std::runtime_error("cache entry: truncated header");
  for (std::size_t e = 0; e < count; ++e) {
    std::size_t len = 0;
    is >> len;
    TermList v(len);
    for (auto& t : v) {
      is >> t.comp;
      std::vector<int> exps(n);
      for (auto& x : exps) is >> x;
      is >> t.coef;
      if (!is || t.comp >= rank || t.coef == 0 || t.coef >= p) throw std::runtime_error("cache entry: bad term");
      t.mono = ring->monomial(exps);
    }
    gb.elements.push_back(std::move(v));
  }
  if (!is) throw std::runtime_error("cache entry: truncated body");
  return gb;
}

GBCache::GBCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::optional<GBasis> GBCache::lookup(const FreeModule& F, const std::vector<TermList>& gens, const GBOptions& opts) {
  fs::path file = dir_ / (gb_fingerprint(F, gens, opts) + ".gb");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto gb = deserialize_basis(buf.str());
    if (!gb || gb->module.ring()->describe() != F.ring()->describe() || gb->module.shifts() != F.shifts() ||
        gb->module.kind() != F.kind())
      return std::nullopt;
    gb->module = F;
    ++hits_;
    return gb;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void GBCache::store(const FreeModule& F, const std::vector<TermList>& gens, const GBOptions& opts,
                    const GBasis& gb) {
  const std::string name = gb_fingerprint(F, gens, opts) + ".gb";
  std::ostringstream tmpname;
  tmpname << name << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  fs::path tmp = dir_ / tmpname.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << serialize_basis(gb);
    if (!out) return;
  }
  std::error_code ec;
  fs::rename(tmp, dir_ / name, ec);
  if (ec) fs::remove(tmp, ec);
}

GBasis GBCache::groebner(const FreeModule& F, std::vector<TermList> gens, const GBOptions& opts) {
  if (auto hit = lookup(F, gens, opts)) return std::move(*hit);
  ++misses_;
  GBasis gb = resint::groebner(F, gens, opts);
  store(F, gens, opts, gb);
  return gb;
}

GBCache::Stats GBCache::stats() const {
  Stats s;
  s.hits = hits_;
  s.misses = misses_;
  if (!fs::exists(dir_)) return s;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.path().extension() != ".gb") continue;
    ++s.entries;
    s.bytes += static_cast<std::size_t>(e.file_size());
  }
  return s;
}

std::size_t GBCache::clear() {
  std::size_t removed = 0;
  if (!fs::exists(dir_)) return 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    auto ext = e.path().extension();
    if (ext == ".gb" || e.path().string().find(".tmp.") != std::string::npos) {
      fs::remove(e.path());
      ++removed;
    }
  }
  return removed;
}

GBCache::VerifyReport GBCache::verify(std::size_t sample, std::uint64_t seed) const {
  VerifyReport r;
  std::vector<fs::path> files;
  if (fs::exists(dir_))
    for (const auto& e : fs::directory_iterator(dir_))
      if (e.path().extension() == ".gb") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::mt19937_64 rng(seed);
  for (std::size_t i = files.size(); i > 1; --i) std::swap(files[i - 1], files[rng() % i]);
  if (files.size() > sample) files.resize(sample);
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      auto gb = deserialize_basis(buf.str());
      if (!gb) {
        ++r.stale;
        continue;
      }
      ++r.checked;
      if (satisfies_buchberger_criterion(*gb)) ++r.passed;
      else r.corrupt.push_back(f.filename().string() + ": Buchberger criterion fails");
    } catch (const std::exception& e) {
      ++r.checked;
      r.corrupt.push_back(f.filename().string() + ": " + e.what());
    }
  }
  return r;
}

void set_global_gb_cache(std::shared_ptr<GBCache> cache) {
  std::lock_guard lock(g_cache_mutex);
  g_cache = std::move(cache);
}

std::shared_ptr<GBCache> global_gb_cache() {
  std::lock_guard lock(g_cache_mutex);
  return g_cache;
}

GBasis cached_groebner(const FreeModule& F, std::vector<TermList> gens, const GBOptions& opts) {
  if (auto c = global_gb_cache()) return c->groebner(F, std::move(gens), opts);
  return groebner(F, std::move(gens), opts);
}

}  // namespace resint
