#pragma once

// Truncated multivariate Laurent series in z_1..z_n, a_1..a_n with Q(q)
// coefficients, and the exp(bilinear(log v)/ln q) prefactors that ride along.

#include <map>
#include <string>
#include <vector>

#include "qmirror/qrat.hpp"
#include "qmirror/scalar.hpp"

namespace qmirror {

struct Monomial {
  std::vector<int> z;
  std::vector<int> a;

  Monomial() = default;
  explicit Monomial(int n) : z(n, 0), a(n, 0) {}
  Monomial(std::vector<int> z_exp, std::vector<int> a_exp);

  int size() const { return static_cast<int>(z.size()); }
  bool is_one() const;
  Monomial inverse() const;
  /// Exchanges the z and a blocks.
  Monomial swapped() const;
  Monomial pow(int e) const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string str() const;
};

/// One of the 2n log-variables: ln z_i occupies slot i, ln a_i slot n + i.
struct Variable {
  enum class Side { Z, A };
  Side side = Side::Z;
  int index = 0;

  static Variable z(int i) { return {Side::Z, i}; }
  static Variable a(int i) { return {Side::A, i}; }
  int slot(int n) const { return side == Side::Z ? index : n + index; }
  int exponent(const Monomial& m) const { return side == Side::Z ? m.z[index] : m.a[index]; }
  std::string str() const;
};

/// A term survives iff z_weights . zExp <= z_bound and a_weights . aExp <= a_bound.
struct TruncationSpec {
  std::vector<int> z_weights;
  std::vector<int> a_weights;
  int z_bound = 0;
  int a_bound = 0;

  int z_grade(const Monomial& m) const;
  int a_grade(const Monomial& m) const;
  bool contains(const Monomial& m) const;
  bool same_grading(const TruncationSpec& o) const;
  TruncationSpec with_bounds(int z, int a) const;
  TruncationSpec swapped() const;

  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;
};

/// Truncated series. Besides the window it records a floor: every term of the
/// underlying (untruncated) series has z-grade >= z_floor and a-grade >= a_floor.
/// Products use the floors to decide how far the result is exact.
class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, QRat>;

  TruncatedSeries() : TruncatedSeries(TruncationSpec{}) {}
  explicit TruncatedSeries(TruncationSpec spec, int z_floor = 0, int a_floor = 0);
  static TruncatedSeries one(const TruncationSpec& spec);
  static TruncatedSeries term(const TruncationSpec& spec, const Monomial& m, const QRat& c = 1);

  const TruncationSpec& spec() const { return spec_; }
  const Terms& terms() const { return terms_; }
  int z_floor() const { return z_floor_; }
  int a_floor() const { return a_floor_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of an in-window monomial (zero if absent).
  QRat coefficient(const Monomial& m) const;
  /// Accumulates c into the coefficient of m; out-of-window terms are dropped.
  void add_term(const Monomial& m, const QRat& c);

  TruncatedSeries truncated(int z_bound, int a_bound) const;
  TruncatedSeries scaled(const QRat& c) const;
  TruncatedSeries times_monomial(const Monomial& m, const QRat& c = 1) const;
  /// Multiplies the coefficient of every monomial with exponent e in v by q^(s*e).
  TruncatedSeries shifted(Variable v, int s) const;
  /// z/a blocks exchanged, q -> 1/q on coefficients.
  TruncatedSeries tau() const;

  friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y);
  friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y);
  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y);
  TruncatedSeries operator-() const;

  /// Same window and same terms.
  friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x.spec_ == y.spec_ && x.terms_ == y.terms_;
  }

 private:
  TruncationSpec spec_;
  int z_floor_;
  int a_floor_;
  Terms terms_;
};

/// exp(x^T B x / ln q) with x = (ln z_1..ln z_n, ln a_1..ln a_n), B symmetric.
class LogPrefactor {
 public:
  explicit LogPrefactor(int n = 0);

  /// sum_i ln z_i ln a_i
  static LogPrefactor mirror_pairing(int n);

  int n() const { return n_; }
  const RatMatrix& matrix() const { return b_; }
  const Rational& entry(Variable u, Variable v) const { return b_(u.slot(n_), v.slot(n_)); }
  bool is_zero() const;

  /// Adds c * ln u * ln v to the exponent's numerator.
  void add(Variable u, Variable v, const Rational& c);
  /// z/a blocks exchanged and the form negated (ln q -> -ln q).
  LogPrefactor tau() const;

  friend LogPrefactor operator+(const LogPrefactor& x, const LogPrefactor& y);
  friend LogPrefactor operator-(const LogPrefactor& x, const LogPrefactor& y);
  LogPrefactor operator-() const;
  friend bool operator==(const LogPrefactor& x, const LogPrefactor& y);

 private:
  int n_;
  RatMatrix b_;
};

struct Contribution {
  LogPrefactor prefactor;
  TruncatedSeries series;
};

/// q^{s v d/dv} applied to prefactor times series. The prefactor is unchanged;
/// the series picks up the monomial and q-power that the shift produces.
Contribution shift_variable(const Contribution& c, Variable v, int s);
/// Simultaneous shift of all 2n variables, `s` indexed by slot.
Contribution shift_variables(const Contribution& c, const std::vector<int>& s);
TruncatedSeries shift_variable(const TruncatedSeries& series, Variable v, int s);

Contribution apply_tau(const Contribution& c);

}  // namespace qmirror
