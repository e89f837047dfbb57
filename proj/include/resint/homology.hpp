#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resint/resolution.hpp"

namespace resint {

/// i-th cohomology of the S-dual of the minimal resolution of M.
GradedModule ext_module(const GradedModule& M, int i);
/// Same, reusing a minimal resolution of M.
GradedModule ext_module(const FreeResolution& minimal, int i);

/// omega_{S/K} = Ext^c_S(S/K, S)(-n), c = codim K, n = number of variables;
/// returned over S/K.
GradedModule canonical_module(const Ideal& K);

/// Hom(M, N) with, for each generator, the map it stands for: an element of
/// the free module with basis e_g (x) f_a^* (g over N's generators, a over M's),
/// index g * rank(F0) + a, meaning f_a -> sum_g entry * e_g.
struct HomModule {
  GradedModule module;
  GradedModule source;  ///< minimal presentation of M used for the maps
  GradedModule target;  ///< minimal presentation of N
  std::vector<TermList> generator_maps;
};
HomModule hom_module(const GradedModule& M, const GradedModule& N);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Unknown };
std::string to_string(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Unknown;
  std::string reason;
  /// Images of the generators of the (minimally presented) source, as
  /// elements of the target's free module, when an isomorphism was found.
  std::optional<std::vector<TermList>> witness;
  /// Dimension of the space of degree-0 maps, when computed.
  std::int64_t hom_dimension = -1;
};

/// Compares Hilbert series and graded Betti numbers, then samples random
/// degree-0 maps A -> B and tests surjectivity. Differing invariants or the
/// absence of any nonzero degree-0 map prove non-isomorphism; failed trials
/// give Unknown.
IsoResult iso_probe(const GradedModule& A, const GradedModule& B, int trials, std::uint64_t seed);

/// Length of a maximal sequence of seeded random linear forms that is regular
/// on M, detected by Hilbert series: l is regular on N iff HS(N/lN) = (1-t)HS(N).
/// A few draws are tried per step.
int depth_by_regular_sequence(const GradedModule& M, std::uint64_t seed);

/// Betti table of a module via its Schreyer resolution and scalar ranks.
BettiTable module_betti(const GradedModule& M, const ResolutionOptions& opts = {});

}  // namespace resint
