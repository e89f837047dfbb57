#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resint/gb.hpp"
#include "resint/ring.hpp"

namespace resint {

/// Laurent polynomial in t with integer coefficients.
class TPoly {
 public:
  TPoly() = default;
  static TPoly monomial(int exp, std::int64_t c = 1) {
    TPoly p;
    if (c) p.c_[exp] = c;
    return p;
  }
  const std::map<int, std::int64_t>& coeffs() const { return c_; }
  std::int64_t coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
  }
  bool is_zero() const { return c_.empty(); }
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly operator+(const TPoly& o) const { return TPoly(*this) += o; }
  TPoly operator-(const TPoly& o) const { return TPoly(*this) -= o; }
  TPoly operator*(const TPoly& o) const;
  TPoly shifted(int by) const;
  std::int64_t at_one() const;
  /// Divides by (1 - t) if divisible; returns false (unchanged) otherwise.
  bool divide_one_minus_t();
  bool operator==(const TPoly& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  void add(int e, std::int64_t v);
  std::map<int, std::int64_t> c_;
};

/// Hilbert series numerator/denominator for a graded module over a ring with
/// variable weights w_i: series = numerator / prod_i (1 - t^{w_i}).
struct HilbertData {
  TPoly numerator;
  std::vector<int> weights;
  /// Krull dimension; -1 for the zero module.
  int dimension = -1;
  /// Multiplicity (standard grading); 0 for the zero module.
  std::int64_t degree = 0;
  /// numerator / (1-t)^{n - dim} after cancellation (standard grading).
  TPoly reduced_numerator;
  bool zero_module() const { return numerator.is_zero(); }
  /// Hilbert function values H(d) for d in [from, to].
  std::vector<std::int64_t> hilbert_function(int from, int to) const;
};

/// Numerator of the Hilbert series of S/(gens) for monomial generators.
TPoly monomial_hilbert_numerator(std::vector<Monomial> gens, const PolyRing& ring);

/// Hilbert data of coker for a Gröbner basis of a submodule of F (TOP order
/// over a degree-compatible ring order); read off the leading terms.
HilbertData hilbert_from_leads(const FreeModule& F, const std::vector<TermList>& gb);
HilbertData hilbert_from_numerator(TPoly numerator, std::vector<int> weights);

}  // namespace resint
