#pragma once

// Exact coefficient field Q(p, q).
//
// BiPoly is a sparse polynomial in the two parameters with rational
// coefficients; Scalar is a reduced fraction of two BiPolys whose
// denominator is monic with respect to the graded-lex term order, so that
// structural equality coincides with field equality.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncg {

using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
 public:
  DivisionByZero() : AlgebraError("division by zero") {}
};

class BiPoly {
 public:
  struct Term {
    int ep = 0;  // exponent of p
    int eq = 0;  // exponent of q
    Rational c;
  };

  BiPoly() = default;
  explicit BiPoly(const Rational& c);
  static BiPoly monomial(const Rational& c, int ep, int eq);
  static BiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int min_ep() const;
  int min_eq() const;
  int max_eq() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly scaled(const Rational& c) const;
  /// Divides every term by p^ep q^eq; the exponents must be available.
  BiPoly shifted_down(int ep, int eq) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b);
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  Rational evaluate(const Rational& p0, const Rational& q0) const;

  /// Exact quotient; throws AlgebraError when b does not divide a.
  static BiPoly divide_exact(const BiPoly& a, const BiPoly& b);
  /// Greatest common divisor, monic in the leading term (zero if both zero).
  static BiPoly gcd(const BiPoly& a, const BiPoly& b);

  /// Terms joined in descending order, exponents shifted by (-sp, -sq).
  std::string to_string(int sp = 0, int sq = 0) const;

 private:
  void canonicalize();
  std::vector<Term> terms_;  // descending graded-lex on (ep+eq, ep), nonzero coefficients
};

class Scalar {
 public:
  Scalar() : num_(), den_(Rational(1)) {}
  Scalar(long v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT: implicit by design of a field type
  Scalar(const Rational& v) : num_(v), den_(Rational(1)) {}  // NOLINT
  Scalar(BiPoly num, BiPoly den);

  static Scalar p() { return Scalar(BiPoly::monomial(1, 1, 0), BiPoly(Rational(1))); }
  static Scalar q() { return Scalar(BiPoly::monomial(1, 0, 1), BiPoly(Rational(1))); }
  /// c * p^a * q^b with a, b of either sign.
  static Scalar laurent(const Rational& c, int a, int b);

  const BiPoly& numerator() const { return num_; }
  const BiPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The value when the scalar does not depend on p, q.
  std::optional<Rational> constant_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(int e) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text; parses back to an equal Scalar.
  std::string to_string() const;
  /// True when printing needs parentheses as a factor in a product.
  bool needs_parens() const;

 private:
  void normalize();
  BiPoly num_;
  BiPoly den_;
};

/// Exact evaluation at (p0, q0); nullopt when the denominator vanishes there.
std::optional<Rational> specialize(const Scalar& x, const Rational& p0, const Rational& q0);

std::string rational_to_string(const Rational& r);

}  // namespace ncg
