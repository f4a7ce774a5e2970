#ifndef LOGB_POLY_HPP
#define LOGB_POLY_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "logbundles/field.hpp"
#include "logbundles/monomial.hpp"

namespace logbund {

struct RingData {
  Field field = Field::rationals();
  int nvars = 0;
  std::vector<std::string> names;
};

using Ring = std::shared_ptr<const RingData>;

Ring make_ring(const Field& field, std::vector<std::string> names);
/// k[x0..x_{n-1}] with default variable names.
Ring make_ring(const Field& field, int nvars, const std::string& stem = "x");
bool same_ring(const Ring& a, const Ring& b);

/// Canonical term order used for storage and printing: graded-lex descending.
struct GrlexDesc {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.bits() > b.bits();
  }
};

using Term = std::pair<Mono, Fq>;

/// Sparse multivariate polynomial with exact coefficients. Terms are kept in
/// graded-lex descending order with nonzero coefficients only; for homogeneous
/// values every exponent vector sums to the same degree (checked on demand,
/// enforced where the geometry requires it).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly zero(const Ring& r) { return Poly(r); }
  static Poly constant(const Ring& r, const Fq& c);
  static Poly constant(const Ring& r, long c) { return constant(r, Fq(r->field, c)); }
  static Poly variable(const Ring& r, int i);
  static Poly term(const Ring& r, const Mono& m, const Fq& c);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Max total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Fq& c) const;
  Poly mul_term(const Mono& m, const Fq& c) const;
  Poly pow(int k) const;

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Fq coeff(const Mono& m) const;
  /// Coefficient of the canonical leading term (zero polynomial -> zero).
  Fq lead_coeff() const;

  Poly derivative(int var) const;
  Fq evaluate(const std::vector<Fq>& point) const;
  /// Ring morphism sending variable i to images[i].
  Poly substitute(const Ring& target, const std::vector<Poly>& images) const;

  /// Divide by the leading coefficient under the canonical order.
  Poly monic() const;
  /// Over Q: scale to integer coefficients with content 1 and positive leading
  /// coefficient. Over F_p this is monic().
  Poly primitive() const;
  /// Exact division; fails if divisor does not divide evenly.
  Poly divide_exact(const Poly& divisor) const;

  std::string to_string() const;
  static Poly parse(const Ring& r, const std::string& text);

  /// Internal: build from term list (any order, duplicates combined).
  static Poly from_terms(const Ring& r, std::vector<Term> terms);

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// Euler vector field applied to f: sum_i x_i * df/dx_i (= deg f * f for
/// homogeneous f in characteristic zero).
Poly euler_apply(const Poly& f);

}  // namespace logbund

#endif
