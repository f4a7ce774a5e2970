#ifndef LOGB_MONOMIAL_HPP
#define LOGB_MONOMIAL_HPP

#include <array>
#include <cstdint>

#include "logbundles/errors.hpp"

namespace logbund {

/// Exponent vector packed 8 bits per variable, variable 0 in the most
/// significant byte, so raw integer comparison is lex with x0 > x1 > ...
/// Supports up to 8 variables and per-variable exponents below 256.
class Mono {
 public:
  static constexpr int kMaxVars = 8;

  Mono() : bits_(0) {}

  static Mono one() { return Mono(); }

  static Mono var(int i, int nvars, int e = 1) {
    Mono m;
    (void)nvars;
    m.set_exp(i, e);
    return m;
  }

  int exp(int i) const { return static_cast<int>((bits_ >> shift(i)) & 0xff); }

  void set_exp(int i, int e) {
    check(i >= 0 && i < kMaxVars, errc::index_out_of_range, "variable index");
    check(e >= 0 && e < 256, errc::internal, "exponent overflow");
    bits_ = (bits_ & ~(0xffull << shift(i))) | (static_cast<std::uint64_t>(e) << shift(i));
  }

  int degree() const {
    int d = 0;
    std::uint64_t b = bits_;
    while (b) {
      d += static_cast<int>(b & 0xff);
      b >>= 8;
    }
    return d;
  }

  Mono operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = exp(i) + o.exp(i);
      check(e < 256, errc::internal, "exponent overflow");
      r.set_exp(i, e);
    }
    return r;
  }

  bool divides(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp(i) > o.exp(i)) return false;
    return true;
  }

  /// this / o, requiring divisibility of o into this.
  Mono operator/(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = exp(i) - o.exp(i);
      check(e >= 0, errc::internal, "monomial division not exact");
      r.set_exp(i, e);
    }
    return r;
  }

  static Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.set_exp(i, a.exp(i) > b.exp(i) ? a.exp(i) : b.exp(i));
    return r;
  }

  static bool coprime(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
  }

  bool operator==(const Mono& o) const { return bits_ == o.bits_; }
  bool operator!=(const Mono& o) const { return bits_ != o.bits_; }
  bool operator<(const Mono& o) const { return bits_ < o.bits_; }

  std::uint64_t bits() const { return bits_; }

 private:
  static int shift(int i) { return 8 * (kMaxVars - 1 - i); }
  std::uint64_t bits_;
};

enum class Order { grlex, grevlex };

/// cmp > 0 when a > b under the given order (x0 > x1 > ... , nvars used by grevlex).
inline int mono_cmp(Order ord, const Mono& a, const Mono& b, int nvars) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  if (a == b) return 0;
  if (ord == Order::grlex) return a.bits() < b.bits() ? -1 : 1;
  // graded reverse lex: the last variable where they differ decides,
  // with the smaller exponent there winning.
  for (int i = nvars - 1; i >= 0; --i) {
    int d = a.exp(i) - b.exp(i);
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace logbund

#endif
