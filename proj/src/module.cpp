#include "resint/module.hpp"

#include <sstream>
#include <stdexcept>

#include "resint/gb_cache.hpp"
#include "resint/kernel.hpp"

namespace resint {

std::vector<TermList> GradedModule::all_relations() const {
  std::vector<TermList> out = relations;
  FreeModule F = free();
  for (const auto& k : ambient)
    for (std::size_t i = 0; i < degrees.size(); ++i) out.push_back(embed(k, static_cast<std::uint32_t>(i), F));
  return out;
}

GradedModule GradedModule::shifted(int k) const {
  GradedModule out = *this;
  for (auto& d : out.degrees) d -= k;
  return out;
}

void GradedModule::validate() const {
  FreeModule F = free();
  for (const auto& r : relations) {
    for (const auto& t : r)
      if (t.comp >= degrees.size()) throw std::invalid_argument("module relation refers to a missing generator");
    if (!F.is_homogeneous(r)) throw std::invalid_argument("module relation is not homogeneous");
  }
  for (const auto& k : ambient)
    if (!k.is_homogeneous()) throw std::invalid_argument("ambient ideal is not homogeneous");
}

GradedModule GradedModule::free_module(RingPtr ring, std::vector<int> degrees, std::vector<Polynomial> ambient) {
  return GradedModule{std::move(ring), std::move(degrees), {}, std::move(ambient)};
}

GradedModule GradedModule::quotient(const Ideal& I) {
  GradedModule M{I.ring(), {0}, {}, I.ambient()};
  FreeModule F = M.free();
  for (const auto& g : I.generators()) M.relations.push_back(embed(g, 0, F));
  return M;
}

GradedModule GradedModule::ideal_module(const Ideal& I) {
  GradedModule M{I.ring(), I.degrees(), {}, I.ambient()};
  FreeModule target = FreeModule::ideal_ambient(I.ring());
  std::vector<TermList> images;
  for (const auto& g : I.generators()) images.push_back(g.terms());
  Ideal K = I.ambient_ideal();
  std::vector<TermList> rel = K.gb().elements;
  M.relations = kernel(target, images, rel, M.free());
  return M;
}

GBasis module_gb(const GradedModule& M) { return cached_groebner(M.free(), M.all_relations()); }

HilbertData module_hilbert(const GradedModule& M) {
  FreeModule F = M.free();
  if (M.ring->order().kind != OrderKind::Degrevlex)
    throw std::invalid_argument("module_hilbert: degree-compatible order required");
  GBasis g = module_gb(M);
  return hilbert_from_leads(F, g.elements);
}

bool is_zero_module(const GradedModule& M) {
  if (M.degrees.empty()) return true;
  GBasis g = module_gb(M);
  std::vector<bool> hit(M.degrees.size(), false);
  for (const auto& e : g.elements)
    if (e.front().mono.is_one()) hit[e.front().comp] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

std::vector<TermList> syzygy(const FreeModule& target, const std::vector<TermList>& columns,
                             const std::vector<int>& degrees) {
  FreeModule source(target.ring(), degrees);
  auto gens = kernel(target, columns, {}, source);
  return minimal_generators(source, gens);
}

TermList apply_map(const FreeModule& target, const std::vector<TermList>& columns, const TermList& v) {
  TermList out;
  for (const auto& t : v) out = target.sub_mul(out, target.field().neg(t.coef), t.mono, columns[t.comp]);
  return out;
}

Polynomial entry(const TermList& v, std::uint32_t comp, const RingPtr& ring) { return component(v, comp, ring); }

std::string format_module(const GradedModule& M) {
  std::ostringstream os;
  os << "generators in degrees";
  for (int d : M.degrees) os << ' ' << d;
  os << "; " << M.relations.size() << " relations";
  if (!M.ambient.empty()) os << "; over a quotient by " << M.ambient.size() << " forms";
  return os.str();
}

}  // namespace resint
