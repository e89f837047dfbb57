#pragma once

#include <string>
#include <vector>

#include "resint/free_module.hpp"
#include "resint/gb.hpp"
#include "resint/hilbert.hpp"
#include "resint/ideal.hpp"

namespace resint {

/// Finitely presented graded S-module coker(F1 -> F0). Generator i of F0 sits
/// in degree degrees[i]; relations are homogeneous elements of F0. A module
/// over R = S/K lists K in `ambient` and is treated as the S-module with the
/// extra relations K*F0.
struct GradedModule {
  RingPtr ring;
  std::vector<int> degrees;
  std::vector<TermList> relations;
  std::vector<Polynomial> ambient;

  FreeModule free() const { return FreeModule(ring, degrees); }
  std::size_t num_generators() const { return degrees.size(); }
  /// Relations followed by K * e_i for every generator.
  std::vector<TermList> all_relations() const;
  /// M(k): generator degrees lowered by k.
  GradedModule shifted(int k) const;
  /// Checks homogeneity of every relation; throws std::invalid_argument.
  void validate() const;

  static GradedModule free_module(RingPtr ring, std::vector<int> degrees, std::vector<Polynomial> ambient = {});
  /// (S/K)/I as a cyclic module generated in degree 0, ambient K kept.
  static GradedModule quotient(const Ideal& I);
  /// The ideal I of R = S/K as an R-module, generated by the generators of I.
  static GradedModule ideal_module(const Ideal& I);
};

/// Reduced Gröbner basis of all relations in the TOP order of F0.
GBasis module_gb(const GradedModule& M);
HilbertData module_hilbert(const GradedModule& M);
bool is_zero_module(const GradedModule& M);

/// Columns generating { c : sum_i c_i * columns[i] = 0 }, a minimal set for
/// homogeneous input. Column i has degree `degrees[i]` (the degree of the
/// corresponding source generator).
std::vector<TermList> syzygy(const FreeModule& target, const std::vector<TermList>& columns,
                             const std::vector<int>& degrees);

/// Image of `v` (an element of a free module whose basis maps to `columns`).
TermList apply_map(const FreeModule& target, const std::vector<TermList>& columns, const TermList& v);

/// Polynomial entry of `v` in component `comp`.
Polynomial entry(const TermList& v, std::uint32_t comp, const RingPtr& ring);

std::string format_module(const GradedModule& M);

}  // namespace resint
