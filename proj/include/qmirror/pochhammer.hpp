#pragma once

// q-Pochhammer symbols: finite (any integer length) as symbolic factor
// products, infinite ones through the q-binomial expansions.

#include <map>
#include <string>
#include <vector>

#include "qmirror/qrat.hpp"
#include "qmirror/series.hpp"

namespace qmirror {

/// Univariate truncated Laurent series sum_k coeffs[k - low] t^k, exact for degrees <= high.
struct LaurentSeries {
  int low = 0;
  int high = 0;
  std::vector<QRat> coeffs;

  QRat at(int k) const;
  /// Largest degree carrying a stored coefficient slot.
  int top() const { return low + static_cast<int>(coeffs.size()) - 1; }
};

LaurentSeries multiply(const LaurentSeries& x, const LaurentSeries& y);
/// sum_{j=0}^{high} c^j t^j
LaurentSeries geometric(const QRat& c, int high);

/// scalar * x^power * prod_c (1 - c x)^{mult_c} for a fixed base monomial x.
/// With a trivial base everything collapses into the scalar.
class LinearFactorProduct {
 public:
  explicit LinearFactorProduct(Monomial base, QRat scalar = 1);

  const Monomial& base() const { return base_; }
  const QRat& scalar() const { return scalar_; }
  int power() const { return power_; }
  const std::map<QRat, int>& factors() const { return factors_; }
  bool is_constant() const { return power_ == 0 && factors_.empty(); }
  /// The scalar value of a constant product.
  QRat value() const;

  /// Multiplies by (1 - c x)^mult.
  void multiply_linear(const QRat& c, int mult);
  void multiply_power(int k);
  void multiply_scalar(const QRat& c);

  LinearFactorProduct inverse() const;
  LinearFactorProduct pow(int e) const;
  /// Re-expresses over `target`, which must be the base or its inverse, using
  /// 1 - c x^{-1} = -c x^{-1} (1 - c^{-1} x).
  LinearFactorProduct rebased(const Monomial& target) const;

  /// Expansion in t = base up to degree high (requires a nontrivial base).
  LaurentSeries expand(int high) const;

  friend LinearFactorProduct operator*(const LinearFactorProduct& x, const LinearFactorProduct& y);
  friend bool operator==(const LinearFactorProduct&, const LinearFactorProduct&) = default;

  std::string str() const;

 private:
  Monomial base_;
  QRat scalar_;
  int power_ = 0;
  std::map<QRat, int> factors_;
};

/// (scale*x; q^{base_power})_d: prod_{l=0}^{d-1} (1 - scale q^{base_power l} x) for d >= 0,
/// prod_{l=1}^{-d} (1 - scale q^{-base_power l} x)^{-1} for d < 0.
LinearFactorProduct pochhammer_finite(const QRat& scale, const Monomial& x, int d, int base_power);

/// sum_{m>=0} (c x)^m within the window of spec.
TruncatedSeries expand_inverse_linear(const Monomial& x, const QRat& c, const TruncationSpec& spec);
/// 1/(scale*x; q)_inf = sum_m (scale x)^m / (q;q)_m
TruncatedSeries inv_infinite_pochhammer(const Monomial& x, const TruncationSpec& spec, const QRat& scale = 1);
/// (scale*x; q)_inf = sum_m (q^{-1} scale x)^m / (q^{-1};q^{-1})_m
TruncatedSeries infinite_pochhammer(const Monomial& x, const TruncationSpec& spec, const QRat& scale = 1);

/// A finite product as a series in the window of spec.
TruncatedSeries to_series(const LinearFactorProduct& f, const TruncationSpec& spec);

/// Largest k with x^k inside the window; x must have nonnegative grades, not both zero.
int max_power_in_window(const Monomial& x, const TruncationSpec& spec);

}  // namespace qmirror
