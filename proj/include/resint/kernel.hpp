#pragma once

#include <vector>

#include "resint/free_module.hpp"
#include "resint/gb.hpp"

namespace resint {

/// Generators (a Gröbner basis) of the submodule
///   { c in source : sum_i c_i * images[i] lies in span(relations) }
/// where images and relations are elements of `target`. The source shifts
/// should equal the image degrees for graded input.
std::vector<TermList> kernel(const FreeModule& target, const std::vector<TermList>& images,
                             const std::vector<TermList>& relations, const FreeModule& source);

/// Subset of `gens` forming a minimal generating set of their span (homogeneous
/// input), in input order. Non-homogeneous input returns the reduced basis.
std::vector<TermList> minimal_generators(const FreeModule& F, const std::vector<TermList>& gens);

}  // namespace resint
