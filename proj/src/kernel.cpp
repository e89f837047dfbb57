#include "resint/kernel.hpp"

#include <stdexcept>

namespace resint {

std::vector<TermList> kernel(const FreeModule& target, const std::vector<TermList>& images,
                             const std::vector<TermList>& relations, const FreeModule& source) {
  if (images.size() != source.rank()) throw std::invalid_argument("kernel: one image per source basis element");
  const auto T = static_cast<std::uint32_t>(target.rank());
  std::vector<int> shifts = target.shifts();
  shifts.insert(shifts.end(), source.shifts().begin(), source.shifts().end());
  FreeModule combined(target.ring(), shifts, ModuleOrderKind::PositionOverTerm);

  std::vector<TermList> gens;
  gens.reserve(images.size() + relations.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    TermList v = images[i];
    v.push_back({target.ring()->one(), T + static_cast<std::uint32_t>(i), 1});
    combined.canonicalize(v);
    gens.push_back(std::move(v));
  }
  for (const auto& r : relations) {
    if (r.empty()) continue;
    TermList v = r;
    combined.canonicalize(v);
    gens.push_back(std::move(v));
  }
  GBasis gb = groebner(combined, std::move(gens));
  std::vector<TermList> out;
  for (auto& g : gb.elements) {
    if (g.front().comp < T) continue;
    for (auto& t : g) t.comp -= T;
    source.canonicalize(g);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<TermList> minimal_generators(const FreeModule& F, const std::vector<TermList>& gens) {
  GBasis gb = groebner(F, gens);
  if (!gb.homogeneous) return gb.elements;
  std::vector<TermList> out;
  for (auto idx : gb.minimal_generators) out.push_back(gens[idx]);
  return out;
}

}  // namespace resint
