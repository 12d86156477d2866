#pragma once

// Exact scalars: rational functions in the deformation parameter q over Q.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qhopf {

/// Dense univariate polynomial over Q, coefficient i multiplies q^i.
/// Trailing zeros are never stored; the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(const mpq_class& c);
  explicit QPoly(std::vector<mpq_class> coeffs);

  static QPoly monomial(const mpq_class& c, int degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& lead() const { return c_.back(); }
  mpq_class coeff(int i) const;
  bool is_constant() const { return c_.size() <= 1; }
  /// Largest k with q^k dividing this (0 for the zero polynomial).
  int q_valuation() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const mpq_class& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  QPoly shifted(int k) const;  // multiply by q^k, k >= 0
  QPoly unshifted(int k) const;  // divide by q^k, requires q^k | this

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  /// Monic gcd; gcd(0,0) = 0.
  static QPoly gcd(QPoly a, QPoly b);

  QPoly monic() const;
  double evaluate(double q) const;
  mpq_class evaluate(const mpq_class& q) const;

  /// Ascending powers, e.g. "1 - q^2", "1/2 q + 3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Element of Q(q) in lowest terms. Stored as q^shift * num/den with
/// num(0) != 0, den(0) != 0, den monic and gcd(num, den) = 1; zero is
/// (0, 0, 1). The representation is unique, so equality is structural.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(long c);  // NOLINT(google-explicit-constructor)
  explicit QRat(const mpq_class& c);
  QRat(const QPoly& num, const QPoly& den);

  /// c * q^k for any integer k.
  static QRat q_power(int k, const mpq_class& c = 1);
  static const QRat& q();

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True when the value is c q^k for a rational c; fills c and k.
  bool is_monomial(mpq_class* c = nullptr, int* k = nullptr) const;
  /// True when the value does not depend on q.
  bool is_constant() const;

  /// Numerator and (monic) denominator of the lowest-terms fraction.
  QPoly numerator() const;
  QPoly denominator() const;

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  QRat inverse() const;  // throws std::domain_error on zero
  QRat pow(long k) const;

  double evaluate(double q) const;
  mpq_class evaluate(const mpq_class& q) const;

  /// Canonical scalar text: "q^-1", "-2 q", "1/2", "(1 - q^2)/(1 + q^2)".
  std::string to_string() const;
  /// Always "(num)/(den)".
  std::string to_fraction_string() const;

 private:
  void normalize();
  int shift_ = 0;
  QPoly num_;
  QPoly den_;
};

}  // namespace qhopf
