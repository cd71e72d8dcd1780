#include "ncgalois/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ncg {

namespace {

bool term_greater(const BiPoly::Term& a, const BiPoly::Term& b) {
  int da = a.ep + a.eq, db = b.ep + b.eq;
  if (da != db) return da > db;
  return a.ep > b.ep;
}

bool same_monomial(const BiPoly::Term& a, const BiPoly::Term& b) {
  return a.ep == b.ep && a.eq == b.eq;
}

// Dense univariate polynomials in p over Q; index = degree.
using UPoly = std::vector<Rational>;

void trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a = quot * b + rem
void udivmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  rem = a;
  quot.clear();
  if (b.empty()) throw DivisionByZero();
  int db = udeg(b);
  if (udeg(rem) >= db) quot.assign(rem.size() - b.size() + 1, Rational(0));
  while (!rem.empty() && udeg(rem) >= db) {
    int shift = udeg(rem) - db;
    Rational c = rem.back() / b.back();
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  trim(quot);
}

UPoly umonic(UPoly u) {
  if (u.empty()) return u;
  Rational lc = u.back();
  for (auto& c : u) c /= lc;
  return u;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly qu, r;
    udivmod(a, b, qu, r);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

// Polynomials in q with coefficients in Q[p]; index = degree in q.
using QPoly = std::vector<UPoly>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

int qdeg(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly to_qpoly(const BiPoly& f) {
  QPoly r(f.is_zero() ? 0 : f.max_eq() + 1);
  for (const auto& t : f.terms()) {
    auto& u = r[t.eq];
    if (static_cast<int>(u.size()) <= t.ep) u.resize(t.ep + 1);
    u[t.ep] += t.c;
  }
  for (auto& u : r) trim(u);
  qtrim(r);
  return r;
}

BiPoly from_qpoly(const QPoly& a) {
  std::vector<BiPoly::Term> terms;
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t i = 0; i < a[j].size(); ++i)
      if (a[j][i] != 0) terms.push_back({static_cast<int>(i), static_cast<int>(j), a[j][i]});
  return BiPoly::from_terms(std::move(terms));
}

UPoly qcontent(const QPoly& a) {
  UPoly g;
  for (const auto& u : a) {
    if (u.empty()) continue;
    g = g.empty() ? umonic(u) : ugcd(g, u);
    if (g.size() == 1) break;
  }
  return g;
}

QPoly qdiv_coeffs(const QPoly& a, const UPoly& c) {
  QPoly r(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    UPoly qu, rem;
    udivmod(a[j], c, qu, rem);
    r[j] = std::move(qu);
  }
  return r;
}

QPoly qprimitive(const QPoly& a) {
  if (a.empty()) return a;
  return qdiv_coeffs(a, qcontent(a));
}

// Pseudo-remainder of a by b (a multiple of lc(b)^k * a reduced modulo b).
QPoly qprem(QPoly r, const QPoly& b) {
  const UPoly& lb = b.back();
  int db = qdeg(b);
  while (!r.empty() && qdeg(r) >= db) {
    UPoly lr = r.back();
    int shift = qdeg(r) - db;
    for (auto& u : r) u = umul(u, lb);
    for (int i = 0; i <= db; ++i) r[shift + i] = usub(r[shift + i], umul(lr, b[i]));
    qtrim(r);
  }
  return r;
}

}  // namespace

// mpq_class(2, 4) is not reduced on construction; GMP arithmetic assumes it is.
BiPoly::BiPoly(const Rational& c) : BiPoly(monomial(c, 0, 0)) {}

BiPoly BiPoly::monomial(const Rational& c, int ep, int eq) {
  BiPoly r;
  Rational v = c;
  v.canonicalize();
  if (v != 0) r.terms_.push_back({ep, eq, std::move(v)});
  return r;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  BiPoly r;
  r.terms_ = std::move(terms);
  r.canonicalize();
  return r;
}

void BiPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    t.c.canonicalize();
    if (!out.empty() && same_monomial(out.back(), t))
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (out.back().c == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].ep == 0 && terms_[0].eq == 0);
}

int BiPoly::min_ep() const {
  int m = terms_.empty() ? 0 : terms_[0].ep;
  for (const auto& t : terms_) m = std::min(m, t.ep);
  return m;
}

int BiPoly::min_eq() const {
  int m = terms_.empty() ? 0 : terms_[0].eq;
  for (const auto& t : terms_) m = std::min(m, t.eq);
  return m;
}

int BiPoly::max_eq() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.eq);
  return m;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && term_greater(a.terms_[i], b.terms_[j]))) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || term_greater(b.terms_[j], a.terms_[i])) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Rational c = a.terms_[i].c + b.terms_[j].c;
      if (c != 0) r.terms_.push_back({a.terms_[i].ep, a.terms_[i].eq, c});
      ++i;
      ++j;
    }
  }
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  if (b.is_monomial()) {
    BiPoly r = a;
    const auto& m = b.terms_[0];
    for (auto& t : r.terms_) {
      t.ep += m.ep;
      t.eq += m.eq;
      t.c *= m.c;
    }
    return r;
  }
  if (a.is_monomial()) return b * a;
  std::vector<BiPoly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({s.ep + t.ep, s.eq + t.eq, s.c * t.c});
  return BiPoly::from_terms(std::move(terms));
}

BiPoly BiPoly::scaled(const Rational& c) const {
  if (c == 0) return BiPoly();
  BiPoly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

BiPoly BiPoly::shifted_down(int ep, int eq) const {
  BiPoly r = *this;
  for (auto& t : r.terms_) {
    t.ep -= ep;
    t.eq -= eq;
  }
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.ep != t.ep || s.eq != t.eq || s.c != t.c) return false;
  }
  return true;
}

Rational BiPoly::evaluate(const Rational& p0, const Rational& q0) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.c;
    for (int i = 0; i < t.ep; ++i) v *= p0;
    for (int i = 0; i < t.eq; ++i) v *= q0;
    sum += v;
  }
  return sum;
}

BiPoly BiPoly::divide_exact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return BiPoly();
  if (b.is_monomial()) {
    const auto& m = b.terms_[0];
    if (a.min_ep() < m.ep || a.min_eq() < m.eq) throw AlgebraError("inexact polynomial division");
    return a.shifted_down(m.ep, m.eq).scaled(1 / m.c);
  }
  QPoly r = to_qpoly(a);
  const QPoly bq = to_qpoly(b);
  QPoly quot(std::max<int>(0, qdeg(r) - qdeg(bq) + 1));
  while (!r.empty()) {
    if (qdeg(r) < qdeg(bq)) throw AlgebraError("inexact polynomial division");
    UPoly c, rem;
    udivmod(r.back(), bq.back(), c, rem);
    if (!rem.empty()) throw AlgebraError("inexact polynomial division");
    int shift = qdeg(r) - qdeg(bq);
    quot[shift] = c;
    for (int i = 0; i <= qdeg(bq); ++i) r[shift + i] = usub(r[shift + i], umul(c, bq[i]));
    qtrim(r);
  }
  return from_qpoly(quot);
}

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
  auto monic = [](const BiPoly& f) { return f.is_zero() ? f : f.scaled(1 / f.leading().c); };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_monomial() || b.is_monomial()) {
    int ep = std::min(a.min_ep(), b.min_ep());
    int eq = std::min(a.min_eq(), b.min_eq());
    return monomial(1, ep, eq);
  }
  QPoly qa = to_qpoly(a), qb = to_qpoly(b);
  UPoly content = ugcd(qcontent(qa), qcontent(qb));
  QPoly x = qprimitive(qa), y = qprimitive(qb);
  if (qdeg(x) < qdeg(y)) std::swap(x, y);
  QPoly g;
  while (true) {
    if (qdeg(y) == 0) {
      g = QPoly{UPoly{Rational(1)}};
      break;
    }
    QPoly r = qprem(x, y);
    if (r.empty()) {
      g = y;
      break;
    }
    x = std::move(y);
    y = qprimitive(r);
  }
  g = qprimitive(g);
  for (auto& u : g) u = umul(u, content);
  return monic(from_qpoly(g));
}

namespace {

void append_monomial(std::ostringstream& os, const Rational& absc, int ep, int eq) {
  std::string out;
  if (absc != 1 || (ep == 0 && eq == 0)) out = rational_to_string(absc);
  for (auto [name, e] : {std::pair{'p', ep}, std::pair{'q', eq}}) {
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  }
  os << out;
}

}  // namespace

std::string BiPoly::to_string(int sp, int sq) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    append_monomial(os, neg ? Rational(-t.c) : t.c, t.ep - sp, t.eq - sq);
    first = false;
  }
  return os.str();
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

Scalar Scalar::laurent(const Rational& c, int a, int b) {
  return Scalar(BiPoly::monomial(c, std::max(a, 0), std::max(b, 0)),
                BiPoly::monomial(1, std::max(-a, 0), std::max(-b, 0)));
}

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = BiPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    BiPoly g = BiPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = BiPoly::divide_exact(num_, g);
      den_ = BiPoly::divide_exact(den_, g);
    }
  }
  const Rational& lc = den_.leading().c;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool Scalar::is_one() const { return den_.is_constant() && num_.is_constant() && num_ == den_; }

std::optional<Rational> Scalar::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (num_.is_zero()) return Rational(0);
  return num_.leading().c / den_.leading().c;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
  } else if (den_.is_monomial() && o.den_.is_monomial()) {
    const auto& m1 = den_.leading();
    const auto& m2 = o.den_.leading();
    int lp = std::max(m1.ep, m2.ep), lq = std::max(m1.eq, m2.eq);
    num_ = num_ * BiPoly::monomial(1, lp - m1.ep, lq - m1.eq) +
           o.num_ * BiPoly::monomial(1, lp - m2.ep, lq - m2.eq);
    den_ = BiPoly::monomial(1, lp, lq);
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  Scalar base = e < 0 ? inverse() : *this;
  Scalar r(1);
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

bool Scalar::needs_parens() const {
  if (!den_.is_monomial()) return true;
  return num_.terms().size() > 1;
}

std::string Scalar::to_string() const {
  if (den_.is_monomial()) {
    const auto& m = den_.leading();
    return num_.to_string(m.ep, m.eq);
  }
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

std::optional<Rational> specialize(const Scalar& x, const Rational& p0, const Rational& q0) {
  Rational d = x.denominator().evaluate(p0, q0);
  if (d == 0) return std::nullopt;
  return x.numerator().evaluate(p0, q0) / d;
}

}  // namespace ncg
