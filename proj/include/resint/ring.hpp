#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resint/field.hpp"
#include "resint/monomial.hpp"

namespace resint {

enum class OrderKind { Degrevlex, Lex, Elimination };

/// Monomial order over the ring variables. `Elimination` compares the
/// weighted degree in the first `block` variables before weighted degrevlex.
struct MonomialOrder {
  OrderKind kind = OrderKind::Degrevlex;
  std::size_t block = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t block) { return {OrderKind::Elimination, block}; }
  bool operator==(const MonomialOrder&) const = default;
  std::string name() const;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Graded polynomial ring k[x_1..x_n] over a prime field.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> names, MonomialOrder order = {},
           std::vector<int> weights = {});

  static RingPtr make(std::uint32_t p, std::vector<std::string> names, MonomialOrder order = {},
                      std::vector<int> weights = {}) {
    return std::make_shared<const PolyRing>(PrimeField(p), std::move(names), order, std::move(weights));
  }

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::string& var_name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& var_names() const { return names_; }
  int weight(std::size_t i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_graded() const;
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Monomial one() const { return {}; }
  Monomial var(std::size_t i, int e = 1) const;
  Monomial monomial(std::span<const int> exps) const;
  int weighted_degree(const Monomial& m) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  Monomial gcd(const Monomial& a, const Monomial& b) const;

  /// Three-way comparison under the ring order; shifts are added to the
  /// degrees of graded orders (module components with degree shifts).
  int compare(const Monomial& a, const Monomial& b, int shift_a = 0, int shift_b = 0) const {
    switch (order_.kind) {
      case OrderKind::Degrevlex:
        return compare_degrevlex(a, b, a.degree() + shift_a, b.degree() + shift_b);
      case OrderKind::Lex: {
        int v = a.first_difference(b);
        if (v < 0) return 0;
        return a.exp(v) > b.exp(v) ? 1 : -1;
      }
      case OrderKind::Elimination: {
        int ba = block_degree(a), bb = block_degree(b);
        if (ba != bb) return ba > bb ? 1 : -1;
        return compare_degrevlex(a, b, a.degree() + shift_a, b.degree() + shift_b);
      }
    }
    return 0;
  }

  std::string format(const Monomial& m) const;

  /// Same field, variables, weights and order.
  bool same_as(const PolyRing& o) const;
  /// A copy of this ring with a different monomial order.
  RingPtr with_order(MonomialOrder order) const;
  /// Canonical text used in fingerprints and cache headers.
  std::string describe() const;

 private:
  static int compare_degrevlex(const Monomial& a, const Monomial& b, int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    int v = a.last_difference(b);
    if (v < 0) return 0;
    return a.exp(v) < b.exp(v) ? 1 : -1;
  }
  int block_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < order_.block; ++i) d += m.exp(i) * weights_[i];
    return d;
  }

  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<int> weights_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && a->same_as(*b)); }

}  // namespace resint
