#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resint/free_module.hpp"

namespace resint {

struct GBOptions {
  /// Process only pairs and generators up to this degree (homogeneous input);
  /// negative means no limit. The result is a Gröbner basis up to that degree.
  int degree_limit = -1;
};

struct GBStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
};

/// Reduced Gröbner basis of a submodule of a free module.
struct GBasis {
  FreeModule module;
  std::vector<TermList> elements;  ///< monic, sorted ascending by leading term
  bool truncated = false;
  int degree_limit = -1;
  /// For homogeneous input: indices of input generators that formed a minimal
  /// generating set (processed in degree order, pairs before generators).
  std::vector<std::size_t> minimal_generators;
  bool homogeneous = true;
  GBStats stats;
};

/// Lead-term divisor lookup over a growing set of monic elements.
class Reducer {
 public:
  explicit Reducer(std::size_t rank) : by_comp_(rank) {}
  void add(const Term& lead, std::size_t index) { by_comp_[lead.comp].push_back({lead.mono, index}); }
  void remove(std::size_t index);
  /// Index of an element whose leading monomial divides `t`, or -1.
  long find(const Term& t) const {
    for (const auto& e : by_comp_[t.comp])
      if (e.lead.divides(t.mono)) return static_cast<long>(e.index);
    return -1;
  }

 private:
  struct Entry {
    Monomial lead;
    std::size_t index;
  };
  std::vector<std::vector<Entry>> by_comp_;
};

/// Buchberger's algorithm with sugar selection and Gebauer–Möller pair
/// elimination; deterministic for fixed input order.
GBasis groebner(const FreeModule& F, std::vector<TermList> gens, const GBOptions& opts = {});

/// Full remainder of `f` on division by `basis` (all elements monic).
TermList normal_form(const FreeModule& F, TermList f, const std::vector<TermList>& basis);
TermList normal_form(const FreeModule& F, TermList f, const std::vector<TermList>& basis,
                     const Reducer& reducer);
Reducer make_reducer(const FreeModule& F, const std::vector<TermList>& basis);

/// Checks the Buchberger criterion: every S-pair reduces to zero.
bool satisfies_buchberger_criterion(const GBasis& gb);

/// Reduced-basis equality (same submodule).
bool same_basis(const GBasis& a, const GBasis& b);

}  // namespace resint
