#pragma once

// Rational functions in q with integer-coefficient numerator and denominator,
// kept in a canonical reduced form so that equality is structural.

#include <compare>
#include <string>
#include <vector>

#include "qmirror/scalar.hpp"

namespace qmirror {

/// Dense univariate polynomial in q, coefficients from low to high degree.
/// Trailing zero coefficients are never stored; zero is the empty vector.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Integer> coefficients);
  QPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit QPolynomial(Integer constant);

  /// c * q^k for k >= 0.
  static QPolynomial monomial(int k, Integer c = 1);

  const std::vector<Integer>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& leading() const { return c_.back(); }
  Integer coefficient(int k) const;
  /// Number of factors q dividing the polynomial.
  int valuation() const;

  Integer content() const;
  QPolynomial primitive_part() const;
  /// q^degree * p(1/q).
  QPolynomial reversed() const;
  QPolynomial shifted(int k) const;  // * q^k, k >= 0
  QPolynomial scaled(const Integer& c) const;
  QPolynomial divided_exactly(const Integer& c) const;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  QPolynomial operator-() const;
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
  friend std::strong_ordering operator<=>(const QPolynomial& a, const QPolynomial& b);

  std::string str() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Exact quotient a / b in Z[q]; b must divide a.
QPolynomial divide_exactly(const QPolynomial& a, const QPolynomial& b);
/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
QPolynomial pseudo_remainder(const QPolynomial& a, const QPolynomial& b);
/// Primitive gcd with positive leading coefficient (gcd(0, 0) = 0).
QPolynomial gcd(const QPolynomial& a, const QPolynomial& b);

/// Element of Q(q). Invariants: gcd(num, den) = 1 in Z[q] including content,
/// den has positive leading coefficient, zero is 0/1.
class QRat {
 public:
  QRat() : num_(0), den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QRat(const Integer& c) : num_(c), den_(1) {}
  explicit QRat(const Rational& c);
  explicit QRat(QPolynomial p) : num_(std::move(p)), den_(1) {}
  QRat(QPolynomial num, QPolynomial den);

  /// q^k for any integer k.
  static QRat q_power(int k);

  const QPolynomial& num() const { return num_; }
  const QPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  QRat inverse() const;
  /// Substitutes q -> 1/q.
  QRat invert_q() const;

  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat operator-() const;
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  friend bool operator==(const QRat&, const QRat&) = default;
  /// Arbitrary but fixed total order, used for map keys.
  friend std::strong_ordering operator<=>(const QRat& a, const QRat& b);

  QRat pow(int e) const;
  std::string str() const;

 private:
  struct Reduced {};
  QRat(QPolynomial num, QPolynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  void normalize_content_and_sign();

  QPolynomial num_;
  QPolynomial den_;
};

/// The finite product prod_{l=1}^{m} (1 - q^{step*l}); step = -1 gives (q^-1; q^-1)_m.
QRat q_factorial(int m, int step);

}  // namespace qmirror
