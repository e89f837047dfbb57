#include "resint/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace resint {

Polynomial::Polynomial(RingPtr ring, TermList terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto& t : terms_) {
    t.comp = 0;
    t.mono.set_degree(ring_->weighted_degree(t.mono));
  }
  terms::canonicalize(terms_, ring_->field(), RingTermCmp{ring_.get()});
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial p(ring);
  Scalar v = ring->field().reduce(c);
  if (v) p.terms_.push_back({ring->one(), 0, v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Polynomial p(ring);
  p.terms_.push_back({ring->var(i), 0, 1});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Scalar c) {
  Polynomial p(std::move(ring));
  if (c) p.terms_.push_back({m, 0, c});
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr ring, TermList terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  return from_sorted(ring_, terms::add(terms_, o.terms_, ring_->field(), RingTermCmp{ring_.get()}));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  return from_sorted(ring_, terms::sub_mul(terms_, 1, ring_->one(), o.terms_, ring_->field(),
                                           RingTermCmp{ring_.get()}));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::scaled(Scalar c) const {
  Polynomial p = *this;
  terms::scale(p.terms_, c, ring_->field());
  return p;
}

Polynomial Polynomial::times(const Monomial& m, Scalar c) const {
  return from_sorted(ring_, terms::mul_monomial(terms_, c, m, ring_->field()));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const auto& k = ring_->field();
  RingTermCmp cmp{ring_.get()};
  // multiply the shorter operand term by term into the longer
  const Polynomial& a = size() <= o.size() ? *this : o;
  const Polynomial& b = size() <= o.size() ? o : *this;
  TermList acc;
  for (const auto& t : a.terms_) acc = terms::sub_mul(acc, k.neg(t.coef), t.mono, b.terms_, k, cmp);
  return from_sorted(ring_, std::move(acc));
}

Polynomial Polynomial::monic() const {
  Polynomial p = *this;
  terms::make_monic(p.terms_, ring_->field());
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->var_names() != ring_->var_names() || !(target->field() == ring_->field()))
    throw std::invalid_argument("in_ring: incompatible rings");
  return Polynomial(target, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& k = ring_->field();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::int64_t c = k.lift(terms_[i].coef);
    bool neg = c < 0;
    if (neg) c = -c;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool one = terms_[i].mono.is_one();
    if (one) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += ring_->format(terms_[i].mono);
    }
  }
  return out;
}

Polynomial power(const Polynomial& f, unsigned e) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target, const std::vector<int>& image) {
  const std::size_t n = f.ring()->nvars();
  if (image.size() != n) throw std::invalid_argument("map_variables: image size mismatch");
  TermList out;
  out.reserve(f.size());
  std::vector<int> exps(target->nvars());
  for (const auto& t : f.terms()) {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      int e = t.mono.exp(i);
      if (!e) continue;
      if (image[i] < 0) throw std::invalid_argument("map_variables: variable has no image");
      exps[static_cast<std::size_t>(image[i])] += e;
    }
    out.push_back({target->monomial(exps), 0, t.coef});
  }
  return Polynomial(target, std::move(out));
}

}  // namespace resint
