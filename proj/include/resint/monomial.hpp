#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace resint {

inline constexpr std::size_t kMaxVars = 32;
/// Exponents are stored one byte each and kept below this bound so that
/// packed word arithmetic never carries between variables.
inline constexpr int kMaxExponent = 127;

/// Exponent vector packed into four 64-bit words, one byte per variable.
/// `degree()` is the weighted degree and is maintained by the owning ring.
class Monomial {
 public:
  Monomial() = default;

  int exp(std::size_t var) const {
    return static_cast<int>((words_[var >> 3] >> ((var & 7) * 8)) & 0xff);
  }
  void set_exp(std::size_t var, int e) {
    if (e < 0 || e > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
    auto shift = (var & 7) * 8;
    words_[var >> 3] = (words_[var >> 3] & ~(std::uint64_t{0xff} << shift)) |
                       (static_cast<std::uint64_t>(e) << shift);
  }
  int degree() const { return degree_; }
  void set_degree(int d) { degree_ = d; }

  bool is_one() const { return (words_[0] | words_[1] | words_[2] | words_[3]) == 0; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const {
    for (int i = 0; i < 4; ++i)
      if ((((other.words_[i] | kHigh) - words_[i]) & kHigh) != kHigh) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    std::uint64_t carry = 0;
    for (int i = 0; i < 4; ++i) {
      r.words_[i] = words_[i] + o.words_[i];
      carry |= r.words_[i];
    }
    if (carry & kHigh) throw std::overflow_error("monomial exponent overflow");
    r.degree_ = degree_ + o.degree_;
    return r;
  }
  /// Exact quotient; caller guarantees `o` divides `*this`.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.words_[i] = words_[i] - o.words_[i];
    r.degree_ = degree_ - o.degree_;
    return r;
  }

  /// Componentwise maximum; the degree must be recomputed by the ring.
  Monomial lcm_exponents(const Monomial& o) const {
    Monomial r;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      int a = exp(v), b = o.exp(v);
      if (a | b) r.set_exp(v, a > b ? a : b);
    }
    return r;
  }
  Monomial gcd_exponents(const Monomial& o) const {
    Monomial r;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      int a = exp(v), b = o.exp(v);
      if (a && b) r.set_exp(v, a < b ? a : b);
    }
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < 4; ++i) {
      std::uint64_t a = words_[i], b = o.words_[i];
      // a byte is nonzero iff any of its bits is set; fold each byte to its low bit
      auto fold = [](std::uint64_t x) {
        x |= x >> 4;
        x |= x >> 2;
        x |= x >> 1;
        return x & 0x0101010101010101ull;
      };
      if (fold(a) & fold(b)) return false;
    }
    return true;
  }

  bool operator==(const Monomial& o) const { return words_ == o.words_; }
  bool operator!=(const Monomial& o) const { return words_ != o.words_; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  /// Index of the last variable (highest index) whose exponents differ, or -1.
  int last_difference(const Monomial& o) const {
    for (int i = 3; i >= 0; --i) {
      std::uint64_t x = words_[i] ^ o.words_[i];
      if (x) return i * 8 + (63 - std::countl_zero(x)) / 8;
    }
    return -1;
  }
  int first_difference(const Monomial& o) const {
    for (int i = 0; i < 4; ++i) {
      std::uint64_t x = words_[i] ^ o.words_[i];
      if (x) return i * 8 + std::countr_zero(x) / 8;
    }
    return -1;
  }

  const std::array<std::uint64_t, 4>& words() const { return words_; }

 private:
  static constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  std::array<std::uint64_t, 4> words_{};
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace resint
