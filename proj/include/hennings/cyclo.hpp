// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A CycloScalar is a rational combination of powers of a primitive n-th root
// of unity, kept reduced modulo the n-th cyclotomic polynomial so that two
// equal field elements always have identical coefficient lists.
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hennings {

using Rational = mpq_class;

/// Raised on division by zero and on malformed scalar literals.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed by dividing x^n - 1 by the cyclotomic polynomials of the proper
/// divisors of n; cached per conductor.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// Euler phi, i.e. the degree of Q(zeta_n) over Q.
unsigned euler_phi(unsigned n);

class CycloScalar {
 public:
  using Term = std::pair<unsigned, Rational>;

  CycloScalar() = default;
  CycloScalar(long value);  // NOLINT(google-explicit-constructor)
  explicit CycloScalar(Rational value, unsigned conductor = 1);

  /// zeta_n^e for any integer e.
  static CycloScalar zeta(unsigned n, long e = 1);

  unsigned conductor() const { return conductor_; }
  /// Nonzero coefficients by increasing exponent; every exponent < phi(n).
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Rational value; throws ArithmeticError when the scalar is irrational.
  Rational rational() const;

  /// Same element viewed in Q(zeta_m); m must be a multiple of the conductor.
  CycloScalar embed(unsigned m) const;
  /// Image under zeta -> zeta^{-1} (complex conjugation).
  CycloScalar conj() const;
  CycloScalar inverse() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& rhs);
  CycloScalar& operator-=(const CycloScalar& rhs);
  CycloScalar& operator*=(const CycloScalar& rhs);
  CycloScalar& operator/=(const CycloScalar& rhs);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  /// Canonical rendering, e.g. "1/3 + 2/3*z^1"; "z" is the primitive
  /// conductor-th root of unity.
  std::string to_string() const;
  /// Literal form used in JSON files: "1/3 + 2/3*zeta^1".
  std::string to_literal() const;
  /// Parses to_literal() output; "zeta" is taken as zeta_n with n = conductor.
  static CycloScalar parse(const std::string& text, unsigned conductor);

  /// Floating point value for display only.
  std::complex<double> to_complex() const;

 private:
  CycloScalar(unsigned conductor, std::vector<Term> terms)
      : conductor_(conductor), terms_(std::move(terms)) {}

  static CycloScalar from_dense(unsigned conductor, const std::vector<Rational>& dense);
  std::vector<Rational> dense() const;

  unsigned conductor_ = 1;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const CycloScalar& x);

/// Decimal rendering with 12 significant digits ("0.333333333333 + 0.577350269190i").
std::string to_decimal(const CycloScalar& x);

}  // namespace hennings
