#pragma once

#include <string>
#include <vector>

#include "resint/polynomial.hpp"
#include "resint/ring.hpp"
#include "resint/terms.hpp"

namespace resint {

/// How module terms m*e_i are ordered: by term first (degree-compatible,
/// components break ties) or by position first (eliminates low-index components).
enum class ModuleOrderKind { TermOverPosition, PositionOverTerm };

/// Graded free module S(-shift_0) + ... + S(-shift_{r-1}) with a term order.
/// Component i has basis element e_i in degree shifts[i].
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(RingPtr ring, std::vector<int> shifts,
             ModuleOrderKind kind = ModuleOrderKind::TermOverPosition)
      : ring_(std::move(ring)), shifts_(std::move(shifts)), kind_(kind) {}

  static FreeModule ideal_ambient(RingPtr ring) { return FreeModule(std::move(ring), {0}); }

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  std::size_t rank() const { return shifts_.size(); }
  int shift(std::size_t c) const { return shifts_[c]; }
  const std::vector<int>& shifts() const { return shifts_; }
  ModuleOrderKind kind() const { return kind_; }

  int compare(const Term& a, const Term& b) const {
    if (kind_ == ModuleOrderKind::PositionOverTerm && a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    int r = ring_->compare(a.mono, b.mono, shifts_[a.comp], shifts_[b.comp]);
    if (r) return r;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
  int degree(const Term& t) const { return t.mono.degree() + shifts_[t.comp]; }

  /// Degree of the leading term; the element's degree when homogeneous.
  int degree(const TermList& v) const { return v.empty() ? 0 : degree(v.front()); }
  bool is_homogeneous(const TermList& v) const {
    for (const auto& t : v)
      if (degree(t) != degree(v.front())) return false;
    return true;
  }

  /// Same ring, shifts, a different order kind.
  FreeModule with_kind(ModuleOrderKind kind) const { return FreeModule(ring_, shifts_, kind); }
  FreeModule with_ring(RingPtr ring) const { return FreeModule(std::move(ring), shifts_, kind_); }

  /// Re-sorts terms built under another order.
  void canonicalize(TermList& v) const;
  TermList add(const TermList& a, const TermList& b) const;
  TermList sub_mul(const TermList& f, Scalar c, const Monomial& m, const TermList& g) const;
  /// sum_i coeffs[i] * v_i for polynomial coefficients.
  TermList times(const Polynomial& f, const TermList& v) const;

  std::string format(const TermList& v) const;

 private:
  RingPtr ring_;
  std::vector<int> shifts_;
  ModuleOrderKind kind_ = ModuleOrderKind::TermOverPosition;
};

struct ModuleCmp {
  const FreeModule* module;
  int operator()(const Term& a, const Term& b) const { return module->compare(a, b); }
};

/// A polynomial placed in component `comp`.
TermList embed(const Polynomial& f, std::uint32_t comp, const FreeModule& F);
/// Entry of `v` in component `comp` as a polynomial.
Polynomial component(const TermList& v, std::uint32_t comp, const RingPtr& ring);

}  // namespace resint
