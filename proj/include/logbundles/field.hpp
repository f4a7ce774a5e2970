#ifndef LOGB_FIELD_HPP
#define LOGB_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "logbundles/errors.hpp"

namespace logbund {

/// Field descriptor: the rationals (characteristic 0) or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string to_string() const;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 means Q
};

/// Exact field element in canonical form: a reduced fraction with positive
/// denominator over Q, or the least non-negative residue over F_p.
class Fq {
 public:
  Fq() : field_(Field::rationals()), res_(0) {}
  explicit Fq(const Field& f) : field_(f), res_(0) {}
  Fq(const Field& f, long v);
  Fq(const Field& f, const mpq_class& v);

  static Fq from_string(const Field& f, const std::string& s);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq operator-() const;
  Fq inv() const;

  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }

  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }

  /// Total order used only for deterministic tie-breaking; not a field notion.
  bool less(const Fq& o) const;

  std::string to_string() const;
  double to_double() const;

  /// Rational payload; valid only over Q.
  const mpq_class& rat() const { return rat_; }
  /// Residue payload; valid only over F_p.
  std::uint64_t residue() const { return res_; }

 private:
  void require_same_field(const Fq& o) const;

  Field field_;
  mpq_class rat_;
  std::uint64_t res_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace logbund

#endif
