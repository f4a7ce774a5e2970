#include "logbundles/field.hpp"

#include <cctype>

namespace logbund {

const char* errc_name(errc c) {
  switch (c) {
    case errc::descriptor_mismatch: return "DescriptorMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::budget_exceeded: return "ComputationBudgetExceeded";
    case errc::not_zero_dimensional: return "NotZeroDimensional";
    case errc::schema_error: return "SchemaError";
    case errc::singular_component: return "SingularComponent";
    case errc::duplicate_component: return "DuplicateComponent";
    case errc::unsupported_degree: return "UnsupportedDegree";
    case errc::unsupported_field: return "UnsupportedField";
    case errc::singular_conic: return "SingularConic";
    case errc::dependent_linear_forms: return "DependentLinearForms";
    case errc::degenerate_quadric: return "DegenerateQuadric";
    case errc::normal_crossings_violation: return "NormalCrossingsViolation";
    case errc::family_mismatch: return "FamilyMismatch";
    case errc::singular_test_curve: return "SingularTestCurve";
    case errc::chart_mismatch: return "ChartMismatch";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::positive_dimensional_locus: return "PositiveDimensionalLocus";
    case errc::zero_kernel_vector: return "ZeroKernelVector";
    case errc::non_real_field: return "NonRealField";
    case errc::usage_error: return "UsageError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  check(p >= 2 && p < (1ull << 62), errc::schema_error, "field characteristic out of range");
  check(is_prime_u64(p), errc::schema_error, "field characteristic must be prime");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rationals() ? std::string("Q") : "F" + std::to_string(p_);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  check(a % p != 0, errc::division_by_zero, "inverse of zero");
  // extended Euclid on (a, p)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Fq::Fq(const Field& f, long v) : field_(f), res_(0) {
  if (f.is_rationals()) {
    rat_ = mpq_class(v);
  } else {
    std::uint64_t p = f.characteristic();
    long m = v % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    res_ = static_cast<std::uint64_t>(m);
  }
}

Fq::Fq(const Field& f, const mpq_class& v) : field_(f), res_(0) {
  if (f.is_rationals()) {
    rat_ = v;
    rat_.canonicalize();
  } else {
    std::uint64_t p = f.characteristic();
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_class num = v.get_num() % pm;
    if (num < 0) num += pm;
    mpz_class den = v.get_den() % pm;
    std::uint64_t d = den.get_ui() % p;
    check(d != 0, errc::division_by_zero, "denominator not invertible mod p");
    res_ = mulmod(num.get_ui(), mod_inverse(d, p), p);
  }
}

Fq Fq::from_string(const Field& f, const std::string& s) {
  check(!s.empty(), errc::schema_error, "empty coefficient");
  for (char ch : s)
    check(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/',
          errc::schema_error, "bad coefficient string: " + s);
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(errc::schema_error, "bad coefficient string: " + s);
  q.canonicalize();
  return Fq(f, q);
}

void Fq::require_same_field(const Fq& o) const {
  check(field_ == o.field_, errc::descriptor_mismatch, "elements of different fields");
}

bool Fq::is_zero() const { return field_.is_rationals() ? rat_ == 0 : res_ == 0; }
bool Fq::is_one() const { return field_.is_rationals() ? rat_ == 1 : res_ == 1; }

Fq Fq::operator+(const Fq& o) const {
  require_same_field(o);
  Fq r(field_);
  if (field_.is_rationals()) {
    r.rat_ = rat_ + o.rat_;
  } else {
    std::uint64_t p = field_.characteristic();
    std::uint64_t s = res_ + o.res_;
    r.res_ = s >= p ? s - p : s;
  }
  return r;
}

Fq Fq::operator-(const Fq& o) const {
  require_same_field(o);
  Fq r(field_);
  if (field_.is_rationals()) {
    r.rat_ = rat_ - o.rat_;
  } else {
    std::uint64_t p = field_.characteristic();
    r.res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + p - o.res_;
  }
  return r;
}

Fq Fq::operator*(const Fq& o) const {
  require_same_field(o);
  Fq r(field_);
  if (field_.is_rationals()) {
    r.rat_ = rat_ * o.rat_;
  } else {
    r.res_ = mulmod(res_, o.res_, field_.characteristic());
  }
  return r;
}

Fq Fq::inv() const {
  Fq r(field_);
  if (field_.is_rationals()) {
    check(rat_ != 0, errc::division_by_zero, "inverse of zero");
    r.rat_ = 1 / rat_;
  } else {
    r.res_ = mod_inverse(res_, field_.characteristic());
  }
  return r;
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inv(); }

Fq Fq::operator-() const {
  Fq r(field_);
  if (field_.is_rationals()) {
    r.rat_ = -rat_;
  } else {
    r.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
  }
  return r;
}

bool Fq::operator==(const Fq& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

bool Fq::less(const Fq& o) const {
  require_same_field(o);
  return field_.is_rationals() ? rat_ < o.rat_ : res_ < o.res_;
}

std::string Fq::to_string() const {
  if (field_.is_rationals()) return rat_.get_str();
  return std::to_string(res_);
}

double Fq::to_double() const {
  if (field_.is_rationals()) return rat_.get_d();
  return static_cast<double>(res_);
}

}  // namespace logbund
