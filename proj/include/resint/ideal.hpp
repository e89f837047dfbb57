#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "resint/gb.hpp"
#include "resint/hilbert.hpp"
#include "resint/polynomial.hpp"

namespace resint {

/// Finitely generated ideal of S, or of R = S/K when `ambient` lists
/// generators of K. Operations on quotient ideals run in S with K appended,
/// so results are S-ideals taken modulo the same K. Copies share one lazily
/// computed Gröbner basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens, std::vector<Polynomial> ambient = {});

  static Ideal unit(RingPtr ring, std::vector<Polynomial> ambient = {});
  static Ideal zero(RingPtr ring, std::vector<Polynomial> ambient = {});
  /// Ideal whose generators are the elements of a reduced Gröbner basis of
  /// (ideal + ambient) already at hand; the basis is reused.
  static Ideal from_basis(RingPtr ring, GBasis basis, std::vector<Polynomial> ambient = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& ambient() const { return ambient_; }
  std::size_t size() const { return gens_.size(); }

  /// Reduced Gröbner basis of generators + ambient under the ring order.
  const GBasis& gb() const;
  /// Generators followed by the ambient generators.
  std::vector<Polynomial> all_generators() const;

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& o) const;
  bool same_as(const Ideal& o) const { return contains(o) && o.contains(*this); }
  bool is_unit() const;
  /// True when every generator lies in the ambient ideal.
  bool is_zero() const;
  bool is_homogeneous() const;
  /// Generator degrees; -1 for zero generators (never stored).
  std::vector<int> degrees() const;
  /// Common generator degree, or -1 when degrees differ or there are none.
  int single_degree() const;

  /// Same ambient, new generators.
  Ideal with_generators(std::vector<Polynomial> gens) const { return Ideal(ring_, std::move(gens), ambient_); }
  /// The ambient ideal as an ideal of S.
  Ideal ambient_ideal() const { return Ideal(ring_, ambient_); }
  /// Generators + ambient as an ideal of S.
  Ideal folded() const { return Ideal(ring_, all_generators()); }
  /// A minimal homogeneous generating set modulo the ambient ideal.
  Ideal minimalized() const;

  std::string to_string() const;

 private:
  struct Lazy {
    std::once_flag once;
    GBasis gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> ambient_;
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

/// Throws std::invalid_argument unless both ideals share a ring and ambient ideal.
void require_compatible(const Ideal& a, const Ideal& b, const char* op);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// All rho-fold products of generators, deduplicated; a^0 is the unit ideal.
Ideal ideal_power(const Ideal& a, unsigned rho);

/// a : b in the ambient quotient.
Ideal colon(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Polynomial& f);

struct Saturation {
  Ideal ideal;
  /// Smallest e with a : b^e = a : b^{e+1}.
  int exponent = 0;
};
/// a : b^infinity by iterated colons.
Saturation saturate(const Ideal& a, const Ideal& b);

/// a ∩ k[keep] (ambient folded in). With `keep` empty the result is the unit
/// or zero ideal according to whether a is the unit ideal.
Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& keep);

/// Hilbert data of R/a, read off the Gröbner basis staircase.
HilbertData hilbert_invariants(const Ideal& a);
/// Krull dimension of R/a (-1 for the unit ideal).
int dimension(const Ideal& a);
/// Codimension of a in S: nvars - dim S/a.
int codimension(const Ideal& a);
std::int64_t degree(const Ideal& a);

/// All monomials of weighted degree d.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int d);

/// Maximal homogeneous ideal of the ring.
Ideal maximal_ideal(const RingPtr& ring, std::vector<Polynomial> ambient = {});
/// Ideal generated by a basis of the degree-t component of a (homogeneous a).
Ideal truncate_ideal(const Ideal& a, int t);

/// Components of an irredundant irreducible decomposition of a monomial ideal
/// of S; each is generated by pure powers of variables.
std::vector<Ideal> monomial_irreducible_decomposition(const Ideal& a);
/// Monomial ideal whose irreducible components all have the same codimension.
bool is_unmixed_monomial(const Ideal& a);

/// Echelon form of a span of polynomials (or module elements) of one degree.
class LinearSpan {
 public:
  LinearSpan(const PrimeField& field, std::function<int(const Term&, const Term&)> cmp)
      : field_(field), cmp_(std::move(cmp)) {}

  /// Remainder of `v` modulo the span; zero iff v lies in the span.
  TermList reduce(TermList v) const;
  /// Adds `v`; returns false when it was already dependent.
  bool add(TermList v);
  bool contains(const TermList& v) const { return reduce(v).empty(); }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<TermList>& rows() const { return rows_; }

 private:
  struct Key {
    Monomial mono;
    std::uint32_t comp;
    bool operator==(const Key& o) const { return mono == o.mono && comp == o.comp; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.mono.hash() * 31 + k.comp; }
  };
  PrimeField field_;
  std::function<int(const Term&, const Term&)> cmp_;
  std::vector<TermList> rows_;
  std::unordered_map<Key, std::size_t, KeyHash> pivots_;
};

LinearSpan polynomial_span(const RingPtr& ring);

}  // namespace resint
