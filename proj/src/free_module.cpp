#include "resint/free_module.hpp"

namespace resint {

void FreeModule::canonicalize(TermList& v) const { terms::canonicalize(v, field(), ModuleCmp{this}); }

TermList FreeModule::add(const TermList& a, const TermList& b) const {
  return terms::add(a, b, field(), ModuleCmp{this});
}

TermList FreeModule::sub_mul(const TermList& f, Scalar c, const Monomial& m, const TermList& g) const {
  return terms::sub_mul(f, c, m, g, field(), ModuleCmp{this});
}

TermList FreeModule::times(const Polynomial& f, const TermList& v) const {
  TermList acc;
  for (const auto& t : f.terms()) acc = sub_mul(acc, field().neg(t.coef), t.mono, v);
  return acc;
}

std::string FreeModule::format(const TermList& v) const {
  if (v.empty()) return "0";
  std::string out;
  for (std::size_t c = 0; c < rank(); ++c) {
    Polynomial p = component(v, static_cast<std::uint32_t>(c), ring_);
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + p.to_string() + ")*e" + std::to_string(c);
  }
  return out;
}

TermList embed(const Polynomial& f, std::uint32_t comp, const FreeModule& F) {
  TermList v = f.terms();
  for (auto& t : v) t.comp = comp;
  if (F.kind() == ModuleOrderKind::TermOverPosition && F.ring()->order() == f.ring()->order()) {
    // a single component keeps the ring order
    return v;
  }
  F.canonicalize(v);
  return v;
}

Polynomial component(const TermList& v, std::uint32_t comp, const RingPtr& ring) {
  TermList out;
  for (const auto& t : v)
    if (t.comp == comp) out.push_back({t.mono, 0, t.coef});
  return Polynomial(ring, std::move(out));
}

}  // namespace resint
