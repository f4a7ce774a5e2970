#include "logbundles/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace logbund {

Ring make_ring(const Field& field, std::vector<std::string> names) {
  check(static_cast<int>(names.size()) <= Mono::kMaxVars, errc::schema_error,
        "at most 8 variables supported");
  auto rd = std::make_shared<RingData>();
  rd->field = field;
  rd->nvars = static_cast<int>(names.size());
  rd->names = std::move(names);
  return rd;
}

Ring make_ring(const Field& field, int nvars, const std::string& stem) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i));
  return make_ring(field, std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->nvars == b->nvars && a->names == b->names;
}

Poly Poly::from_terms(const Ring& r, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return GrlexDesc{}(a.first, b.first); });
  Poly p(r);
  for (auto& t : terms) {
    if (t.second.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
  }
  return p;
}

Poly Poly::constant(const Ring& r, const Fq& c) {
  Poly p(r);
  if (!c.is_zero()) p.terms_.push_back({Mono::one(), c});
  return p;
}

Poly Poly::variable(const Ring& r, int i) {
  check(i >= 0 && i < r->nvars, errc::index_out_of_range, "variable index");
  Poly p(r);
  p.terms_.push_back({Mono::var(i, r->nvars), Fq(r->field, 1)});
  return p;
}

Poly Poly::term(const Ring& r, const Mono& m, const Fq& c) {
  Poly p(r);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Mono::one());
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  // first term has maximal degree in graded order
  return terms_.front().first.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().first.degree();
  for (const auto& t : terms_)
    if (t.first.degree() != d) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  check(same_ring(ring_, o.ring_), errc::descriptor_mismatch, "polynomials over different rings");
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  GrlexDesc gt;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      Fq c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) r.terms_.push_back({terms_[i].first, c});
      ++i, ++j;
    } else if (gt(terms_[i].first, o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first, -t.second});
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Mono& m, const Fq& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Fq cc = t.second * c;
    if (!cc.is_zero()) r.terms_.push_back({t.first * m, cc});
  }
  return r;
}

Poly Poly::scaled(const Fq& c) const { return mul_term(Mono::one(), c); }

Poly Poly::operator*(const Poly& o) const {
  check(same_ring(ring_, o.ring_), errc::descriptor_mismatch, "polynomials over different rings");
  if (is_zero() || o.is_zero()) return Poly(ring_);
  std::map<Mono, Fq, GrlexDesc> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Mono m = a.first * b.first;
      Fq c = a.second * b.second;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, c);
      else
        it->second += c;
    }
  Poly r(ring_);
  for (auto& kv : acc)
    if (!kv.second.is_zero()) r.terms_.push_back({kv.first, kv.second});
  return r;
}

Poly Poly::pow(int k) const {
  check(k >= 0, errc::internal, "negative power");
  Poly r = Poly::constant(ring_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second)
      return false;
  return true;
}

Fq Poly::coeff(const Mono& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return Fq(ring_->field, 0L);
}

Fq Poly::lead_coeff() const {
  if (terms_.empty()) return Fq(ring_->field, 0L);
  return terms_.front().second;
}

Poly Poly::derivative(int var) const {
  check(var >= 0 && var < ring_->nvars, errc::index_out_of_range, "variable index");
  Poly r(ring_);
  for (const auto& t : terms_) {
    int e = t.first.exp(var);
    if (e == 0) continue;
    Fq c = t.second * Fq(ring_->field, static_cast<long>(e));
    if (c.is_zero()) continue;
    Mono m = t.first;
    m.set_exp(var, e - 1);
    r.terms_.push_back({m, c});
  }
  return r;  // order preserved: decrementing one exponent keeps relative grlex order
}

Fq Poly::evaluate(const std::vector<Fq>& point) const {
  check(static_cast<int>(point.size()) == ring_->nvars, errc::descriptor_mismatch,
        "point length != nvars");
  for (const auto& c : point)
    check(c.field() == ring_->field, errc::descriptor_mismatch, "point over wrong field");
  // cache powers per variable
  std::vector<std::vector<Fq>> pows(ring_->nvars);
  for (int i = 0; i < ring_->nvars; ++i) pows[i].push_back(Fq(ring_->field, 1));
  Fq acc(ring_->field, 0L);
  for (const auto& t : terms_) {
    Fq v = t.second;
    for (int i = 0; i < ring_->nvars; ++i) {
      int e = t.first.exp(i);
      auto& pw = pows[i];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * point[i]);
      if (e > 0) v *= pw[e];
    }
    acc += v;
  }
  return acc;
}

Poly Poly::substitute(const Ring& target, const std::vector<Poly>& images) const {
  check(static_cast<int>(images.size()) == ring_->nvars, errc::descriptor_mismatch,
        "one image per variable required");
  for (const auto& g : images)
    check(same_ring(g.ring(), target), errc::descriptor_mismatch, "image over wrong ring");
  check(target->field == ring_->field, errc::descriptor_mismatch, "field mismatch");
  std::vector<std::vector<Poly>> pows(ring_->nvars);
  for (int i = 0; i < ring_->nvars; ++i) pows[i].push_back(Poly::constant(target, 1));
  Poly acc(target);
  for (const auto& t : terms_) {
    Poly v = Poly::constant(target, t.second);
    for (int i = 0; i < ring_->nvars; ++i) {
      int e = t.first.exp(i);
      auto& pw = pows[i];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      if (e > 0) v *= pw[e];
    }
    acc += v;
  }
  return acc;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().second.inv());
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  if (!ring_->field.is_rationals()) return monic();
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.rat().get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.rat().get_den().get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.front().second.rat() < 0) scale = -scale;
  return scaled(Fq(ring_->field, scale));
}

Poly Poly::divide_exact(const Poly& divisor) const {
  check(!divisor.is_zero(), errc::division_by_zero, "division by zero polynomial");
  Poly rem = *this;
  Poly quot(ring_);
  const Mono dm = divisor.terms_.front().first;
  const Fq dc = divisor.terms_.front().second;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.front();
    check(dm.divides(lt.first), errc::internal, "polynomial division not exact");
    Mono qm = lt.first / dm;
    Fq qc = lt.second / dc;
    quot.terms_.push_back({qm, qc});
    rem -= divisor.mul_term(qm, qc);
  }
  return Poly::from_terms(ring_, std::move(quot.terms_));
}

Poly euler_apply(const Poly& f) {
  const Ring& r = f.ring();
  Poly acc(r);
  for (int i = 0; i < r->nvars; ++i)
    acc += Poly::variable(r, i) * f.derivative(i);
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.second.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (first) {
      if (neg) out << "-", c = c.substr(1);
    } else {
      out << (neg ? " - " : " + ");
      if (neg) c = c.substr(1);
    }
    first = false;
    bool has_mono = t.first != Mono::one();
    if (c != "1" || !has_mono) {
      out << c;
      if (has_mono) out << "*";
    }
    bool star = false;
    for (int i = 0; i < ring_->nvars; ++i) {
      int e = t.first.exp(i);
      if (e == 0) continue;
      if (star) out << "*";
      star = true;
      out << ring_->names[i];
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

}  // namespace

Poly Poly::parse(const Ring& r, const std::string& text) {
  Scanner sc{text};
  std::vector<Term> terms;
  bool expect_term = true;
  int sign = 1;
  while (!sc.eof()) {
    char c = sc.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -sign;
      ++sc.pos;
      expect_term = true;
      continue;
    }
    check(expect_term, errc::schema_error, "malformed polynomial: " + text);
    // one term: optional coefficient, then variable factors joined by '*'
    Fq coeff(r->field, 1);
    Mono mono;
    bool saw_factor = false;
    bool want_factor = true;
    while (want_factor) {
      sc.skip_ws();
      char ch = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = sc.pos;
        while (sc.pos < sc.s.size() &&
               (std::isdigit(static_cast<unsigned char>(sc.s[sc.pos])) || sc.s[sc.pos] == '/'))
          ++sc.pos;
        coeff *= Fq::from_string(r->field, sc.s.substr(start, sc.pos - start));
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::size_t start = sc.pos;
        while (sc.pos < sc.s.size() && (std::isalnum(static_cast<unsigned char>(sc.s[sc.pos])) ||
                                        sc.s[sc.pos] == '_'))
          ++sc.pos;
        std::string name = sc.s.substr(start, sc.pos - start);
        int var = -1;
        for (int i = 0; i < r->nvars; ++i)
          if (r->names[i] == name) var = i;
        check(var >= 0, errc::schema_error, "unknown variable: " + name);
        int e = 1;
        sc.skip_ws();
        if (sc.peek() == '^') {
          ++sc.pos;
          sc.skip_ws();
          std::size_t est = sc.pos;
          while (sc.pos < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.pos])))
            ++sc.pos;
          check(sc.pos > est, errc::schema_error, "missing exponent");
          e = std::stoi(sc.s.substr(est, sc.pos - est));
        }
        mono.set_exp(var, mono.exp(var) + e);
        saw_factor = true;
      } else {
        fail(errc::schema_error, "malformed polynomial: " + text);
      }
      sc.skip_ws();
      if (sc.peek() == '*') {
        ++sc.pos;
        want_factor = true;
      } else {
        want_factor = false;
      }
    }
    check(saw_factor, errc::schema_error, "malformed polynomial: " + text);
    if (sign < 0) coeff = -coeff;
    terms.push_back({mono, coeff});
    sign = 1;
    expect_term = false;
  }
  check(!expect_term || terms.empty(), errc::schema_error, "trailing sign: " + text);
  return Poly::from_terms(r, std::move(terms));
}

}  // namespace logbund
