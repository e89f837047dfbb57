#include "resint/ring.hpp"

#include <set>
#include <sstream>

namespace resint {

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Degrevlex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Elimination: return "elim" + std::to_string(block);
  }
  return "?";
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names, MonomialOrder order,
                   std::vector<int> weights)
    : field_(field), names_(std::move(names)), order_(order), weights_(std::move(weights)) {
  if (names_.size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name " + n);
  }
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw std::invalid_argument("one weight per variable required");
  for (int w : weights_)
    if (w <= 0) throw std::invalid_argument("variable weights must be positive");
  if (order_.kind == OrderKind::Elimination && order_.block > names_.size())
    throw std::invalid_argument("elimination block larger than variable count");
}

bool PolyRing::standard_graded() const {
  for (int w : weights_)
    if (w != 1) return false;
  return true;
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Monomial PolyRing::var(std::size_t i, int e) const {
  Monomial m;
  m.set_exp(i, e);
  m.set_degree(e * weights_[i]);
  return m;
}

Monomial PolyRing::monomial(std::span<const int> exps) const {
  if (exps.size() != nvars()) throw std::invalid_argument("exponent vector length mismatch");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i]) m.set_exp(i, exps[i]);
  m.set_degree(weighted_degree(m));
  return m;
}

int PolyRing::weighted_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < nvars(); ++i) d += m.exp(i) * weights_[i];
  return d;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m = a.lcm_exponents(b);
  m.set_degree(weighted_degree(m));
  return m;
}

Monomial PolyRing::gcd(const Monomial& a, const Monomial& b) const {
  Monomial m = a.gcd_exponents(b);
  m.set_degree(weighted_degree(m));
  return m;
}

std::string PolyRing::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    int e = m.exp(i);
    if (!e) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool PolyRing::same_as(const PolyRing& o) const {
  return field_ == o.field_ && names_ == o.names_ && order_ == o.order_ && weights_ == o.weights_;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return std::make_shared<const PolyRing>(field_, names_, order, weights_);
}

std::string PolyRing::describe() const {
  std::ostringstream os;
  os << "p=" << field_.characteristic() << ";vars=";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) os << ',';
    os << names_[i];
    if (weights_[i] != 1) os << ':' << weights_[i];
  }
  os << ";order=" << order_.name();
  return os.str();
}

}  // namespace resint
