#pragma once

#include <string>
#include <vector>

#include "resint/ring.hpp"
#include "resint/terms.hpp"

namespace resint {

/// Multivariate polynomial over a prime field in canonical form: terms
/// strictly descending in the ring order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Takes arbitrary terms and canonicalizes them.
  Polynomial(RingPtr ring, TermList terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Scalar c = 1);
  /// Wraps terms already in canonical order.
  static Polynomial from_sorted(RingPtr ring, TermList terms);

  const RingPtr& ring() const { return ring_; }
  const TermList& terms() const { return terms_; }
  TermList& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Maximum weighted degree of a term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(Scalar c) const;
  Polynomial times(const Monomial& m, Scalar c = 1) const;
  Polynomial monic() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Same polynomial in another ring with identical variables (order may differ).
  Polynomial in_ring(const RingPtr& target) const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;
  RingPtr ring_;
  TermList terms_;
};

/// Comparator on terms of a polynomial ring (component ignored).
struct RingTermCmp {
  const PolyRing* ring;
  int operator()(const Term& a, const Term& b) const { return ring->compare(a.mono, b.mono); }
};

Polynomial power(const Polynomial& f, unsigned e);

/// Renames variables: variable i of f's ring becomes variable image[i] of
/// `target`. A negative image requires the variable not to occur.
Polynomial map_variables(const Polynomial& f, const RingPtr& target, const std::vector<int>& image);

}  // namespace resint
