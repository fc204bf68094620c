#include "qmirror/pochhammer.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "qmirror/error.hpp"

namespace qmirror {

QRat LaurentSeries::at(int k) const {
  if (k > high) throw Error(ErrorKind::OutOfTruncationRange, "degree beyond the exact range of a Laurent series");
  if (k < low || k > top()) return QRat();
  return coeffs[k - low];
}

LaurentSeries multiply(const LaurentSeries& x, const LaurentSeries& y) {
  LaurentSeries out;
  out.low = x.low + y.low;
  out.high = std::min(x.high + y.low, y.high + x.low);
  const int len = out.high - out.low + 1;
  if (len <= 0 || x.coeffs.empty() || y.coeffs.empty()) return out;
  out.coeffs.assign(len, QRat());
  for (size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (size_t j = 0; j < y.coeffs.size() && static_cast<int>(i + j) < len; ++j)
      if (!y.coeffs[j].is_zero()) out.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
  }
  while (!out.coeffs.empty() && out.coeffs.back().is_zero()) out.coeffs.pop_back();
  return out;
}

LaurentSeries geometric(const QRat& c, int high) {
  LaurentSeries out;
  out.high = high;
  QRat p(1);
  for (int j = 0; j <= high; ++j) {
    out.coeffs.push_back(p);
    p *= c;
    if (p.is_zero()) break;
  }
  return out;
}

LinearFactorProduct::LinearFactorProduct(Monomial base, QRat scalar) : base_(std::move(base)), scalar_(std::move(scalar)) {}

QRat LinearFactorProduct::value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "factor product " + str() + " is not constant");
  return scalar_;
}

void LinearFactorProduct::multiply_linear(const QRat& c, int mult) {
  if (mult == 0 || c.is_zero()) return;
  if (base_.is_one()) {
    const QRat f = QRat(1) - c;
    if (f.is_zero()) {
      if (mult < 0) throw Error(ErrorKind::PoleAtTruncation, "reciprocal factor (1 - " + c.str() + ") vanishes");
      scalar_ = QRat();
      return;
    }
    scalar_ *= f.pow(mult);
    return;
  }
  if (scalar_.is_zero()) return;
  auto [it, inserted] = factors_.emplace(c, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) factors_.erase(it);
  }
}

void LinearFactorProduct::multiply_power(int k) {
  if (base_.is_one() || scalar_.is_zero()) return;
  power_ += k;
}

void LinearFactorProduct::multiply_scalar(const QRat& c) {
  scalar_ *= c;
  if (scalar_.is_zero()) {
    power_ = 0;
    factors_.clear();
  }
}

LinearFactorProduct LinearFactorProduct::inverse() const {
  if (scalar_.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of a vanishing factor product");
  LinearFactorProduct out(base_, scalar_.inverse());
  out.power_ = -power_;
  for (const auto& [c, e] : factors_) out.factors_.emplace(c, -e);
  return out;
}

LinearFactorProduct LinearFactorProduct::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LinearFactorProduct out(base_, scalar_.pow(e));
  if (out.scalar_.is_zero()) return out;
  out.power_ = power_ * e;
  if (e != 0)
    for (const auto& [c, m] : factors_) out.factors_.emplace(c, m * e);
  return out;
}

LinearFactorProduct LinearFactorProduct::rebased(const Monomial& target) const {
  if (target == base_) return *this;
  if (target != base_.inverse())
    throw Error(ErrorKind::InvalidArgument, "cannot rebase " + base_.str() + " onto " + target.str());
  LinearFactorProduct out(target, scalar_);
  out.power_ = -power_;
  for (const auto& [c, e] : factors_) {
    out.scalar_ *= (-c).pow(e);
    out.power_ -= e;
    out.multiply_linear(c.inverse(), e);
  }
  return out;
}

LinearFactorProduct operator*(const LinearFactorProduct& x, const LinearFactorProduct& y) {
  if (y.base_.is_one() && y.is_constant()) {
    LinearFactorProduct out = x;
    out.multiply_scalar(y.scalar_);
    return out;
  }
  if (x.base_.is_one() && x.is_constant()) return y * x;
  LinearFactorProduct out = x;
  const LinearFactorProduct other = y.rebased(x.base_);
  out.multiply_scalar(other.scalar_);
  if (out.scalar_.is_zero()) return out;
  out.power_ += other.power_;
  for (const auto& [c, e] : other.factors_) out.multiply_linear(c, e);
  return out;
}

LaurentSeries LinearFactorProduct::expand(int high) const {
  if (base_.is_one()) throw Error(ErrorKind::InvalidArgument, "expansion in a trivial base");
  LaurentSeries out;
  out.low = 0;
  out.high = high - power_;
  if (out.high >= 0) out.coeffs.push_back(scalar_);
  if (scalar_.is_zero()) out.coeffs.clear();
  for (const auto& [c, e] : factors_) {
    if (out.coeffs.empty()) break;
    LaurentSeries f;
    f.high = out.high;
    if (e > 0) {
      f.coeffs = {QRat(1), -c};
      for (int k = 1; k < e; ++k) {
        LaurentSeries g{0, out.high, {QRat(1), -c}};
        f = multiply(f, g);
      }
      while (static_cast<int>(f.coeffs.size()) > out.high + 1) f.coeffs.pop_back();
    } else {
      f = geometric(c, out.high);
      for (int k = 1; k < -e; ++k) f = multiply(f, geometric(c, out.high));
    }
    out = multiply(out, f);
  }
  out.low += power_;
  out.high += power_;
  return out;
}

std::string LinearFactorProduct::str() const {
  std::ostringstream os;
  os << "(" << scalar_.str() << ")";
  if (power_ != 0) os << "*x^" << power_;
  for (const auto& [c, e] : factors_) os << "*(1 - (" << c.str() << ")*x)^" << e;
  os << " [x = " << base_.str() << "]";
  return os.str();
}

LinearFactorProduct pochhammer_finite(const QRat& scale, const Monomial& x, int d, int base_power) {
  LinearFactorProduct out(x);
  if (d >= 0) {
    for (int l = 0; l < d; ++l) out.multiply_linear(scale * QRat::q_power(base_power * l), 1);
  } else {
    for (int l = 1; l <= -d; ++l) out.multiply_linear(scale * QRat::q_power(-base_power * l), -1);
  }
  return out;
}

int max_power_in_window(const Monomial& x, const TruncationSpec& spec) {
  const int gz = spec.z_grade(x), ga = spec.a_grade(x);
  if (gz < 0 || ga < 0 || (gz == 0 && ga == 0))
    throw Error(ErrorKind::NonPositiveGrading, "monomial " + x.str() + " is not positively graded");
  int k = std::numeric_limits<int>::max();
  auto cap = [&](int g, int bound) {
    if (g == 0) return;
    if (bound < 0) {
      k = -1;
      return;
    }
    k = std::min(k, bound / g);
  };
  cap(gz, spec.z_bound);
  cap(ga, spec.a_bound);
  return k;
}

TruncatedSeries expand_inverse_linear(const Monomial& x, const QRat& c, const TruncationSpec& spec) {
  const int top = max_power_in_window(x, spec);
  TruncatedSeries out(spec);
  Monomial m(x.size());
  QRat p(1);
  for (int j = 0; j <= top && !p.is_zero(); ++j) {
    out.add_term(m, p);
    m = m * x;
    p *= c;
  }
  return out;
}

TruncatedSeries inv_infinite_pochhammer(const Monomial& x, const TruncationSpec& spec, const QRat& scale) {
  const int top = max_power_in_window(x, spec);
  TruncatedSeries out(spec);
  Monomial m(x.size());
  QRat p(1);
  for (int j = 0; j <= top; ++j) {
    out.add_term(m, p);
    m = m * x;
    p = p * scale / (QRat(1) - QRat::q_power(j + 1));
  }
  return out;
}

TruncatedSeries infinite_pochhammer(const Monomial& x, const TruncationSpec& spec, const QRat& scale) {
  const int top = max_power_in_window(x, spec);
  TruncatedSeries out(spec);
  Monomial m(x.size());
  QRat p(1);
  const QRat step = scale * QRat::q_power(-1);
  for (int j = 0; j <= top; ++j) {
    out.add_term(m, p);
    m = m * x;
    p = p * step / (QRat(1) - QRat::q_power(-(j + 1)));
  }
  return out;
}

TruncatedSeries to_series(const LinearFactorProduct& f, const TruncationSpec& spec) {
  const Monomial& x = f.base();
  if (x.is_one() || f.is_constant()) {
    TruncatedSeries out(spec);
    out.add_term(Monomial(static_cast<int>(spec.z_weights.size())), f.value());
    return out;
  }
  const int top = max_power_in_window(x, spec);
  const LaurentSeries e = f.expand(top);
  TruncatedSeries out(spec, spec.z_grade(x) * e.low, spec.a_grade(x) * e.low);
  for (int k = e.low; k <= std::min(e.top(), top); ++k) out.add_term(x.pow(k), e.at(k));
  return out;
}

}  // namespace qmirror
