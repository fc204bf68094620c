#include "qmirror/qrat.hpp"

#include <algorithm>
#include <sstream>

#include "qmirror/error.hpp"

namespace qmirror {

QPolynomial::QPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }
QPolynomial::QPolynomial(long constant) : QPolynomial(Integer(constant)) {}
QPolynomial::QPolynomial(Integer constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

QPolynomial QPolynomial::monomial(int k, Integer c) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative power in polynomial monomial");
  if (c == 0) return {};
  std::vector<Integer> v(static_cast<size_t>(k) + 1);
  v[k] = std::move(c);
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer QPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

int QPolynomial::valuation() const {
  int v = 0;
  while (v < static_cast<int>(c_.size()) && c_[v] == 0) ++v;
  return v;
}

Integer QPolynomial::content() const {
  Integer g = 0;
  for (const auto& x : c_) {
    g = mp::gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

QPolynomial QPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  return divided_exactly(g);
}

QPolynomial QPolynomial::reversed() const {
  std::vector<Integer> v(c_.rbegin(), c_.rend());
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::shifted(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative polynomial shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> v(static_cast<size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::scaled(const Integer& c) const {
  if (c == 0) return {};
  QPolynomial out = *this;
  for (auto& x : out.c_) x *= c;
  return out;
}

QPolynomial QPolynomial::divided_exactly(const Integer& c) const {
  QPolynomial out = *this;
  for (auto& x : out.c_) {
    if (x % c != 0) throw Error(ErrorKind::InvalidArgument, "inexact scalar division");
    x /= c;
  }
  return out;
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + (-b); }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPolynomial(std::move(v));
}

std::strong_ordering operator<=>(const QPolynomial& a, const QPolynomial& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] < b.c_[i]) return std::strong_ordering::less;
    if (a.c_[i] > b.c_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Integer mag = abs(c_[k]);
    if (first) {
      if (c_[k] < 0) os << "-";
    } else {
      os << (c_[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.str();
      continue;
    }
    if (mag != 1) os << mag.str() << "*";
    os << "q";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

QPolynomial divide_exactly(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Integer> quotient(static_cast<size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    const Integer& top = r[k + db];
    if (top == 0) continue;
    if (top % bc[db] != 0) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    Integer f = top / bc[db];
    for (int j = 0; j <= db; ++j) r[k + j] -= f * bc[j];
    quotient[k] = std::move(f);
  }
  for (const auto& x : r)
    if (x != 0) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return QPolynomial(std::move(quotient));
}

QPolynomial pseudo_remainder(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const Integer& lc = b.leading();
  std::vector<Integer> r = a.coefficients();
  int steps = a.degree() - db + 1;
  for (int top = a.degree(); top >= db; --top) {
    const Integer t = r[top];
    for (auto& x : r) x *= lc;
    if (t != 0)
      for (int j = 0; j <= db; ++j) r[top - db + j] -= t * b.coefficients()[j];
    r.pop_back();
    --steps;
  }
  QPolynomial out(std::move(r));
  return steps > 0 ? out.scaled(mp::pow(lc, static_cast<unsigned>(steps))) : out;
}

QPolynomial gcd(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  const int va = a.valuation(), vb = b.valuation();
  const int v = std::min(va, vb);
  QPolynomial x = (va ? QPolynomial(std::vector<Integer>(a.coefficients().begin() + va, a.coefficients().end())) : a)
                      .primitive_part();
  QPolynomial y = (vb ? QPolynomial(std::vector<Integer>(b.coefficients().begin() + vb, b.coefficients().end())) : b)
                      .primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = QPolynomial(1);
      break;
    }
    QPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part().shifted(v);
}

QRat::QRat(const Rational& c) : num_(Integer(mp::numerator(c))), den_(Integer(mp::denominator(c))) {}

QRat::QRat(QPolynomial num, QPolynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

QRat QRat::q_power(int k) {
  if (k >= 0) return QRat(QPolynomial::monomial(k), QPolynomial(1), Reduced{});
  return QRat(QPolynomial(1), QPolynomial::monomial(-k), Reduced{});
}

bool QRat::is_one() const { return den_.degree() == 0 && num_ == den_; }

void QRat::normalize() {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QPolynomial(1);
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    QPolynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divide_exactly(num_, g);
      den_ = divide_exactly(den_, g);
    }
  } else if (den_.degree() > 0 || num_.degree() > 0) {
    // a constant on one side shares no polynomial factor with the other
  }
  normalize_content_and_sign();
}

void QRat::normalize_content_and_sign() {
  Integer c = mp::gcd(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divided_exactly(c);
    den_ = den_.divided_exactly(c);
  }
}

QRat QRat::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  QRat out(den_, num_, Reduced{});
  if (out.den_.leading() < 0) {
    out.num_ = -out.num_;
    out.den_ = -out.den_;
  }
  return out;
}

QRat QRat::invert_q() const {
  if (is_zero()) return *this;
  QPolynomial n = num_.reversed(), d = den_.reversed();
  const int diff = den_.degree() - num_.degree();
  if (diff > 0) n = n.shifted(diff);
  if (diff < 0) d = d.shifted(-diff);
  return QRat(std::move(n), std::move(d));
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.degree() == 0 && a.den_.leading() == 1) return QRat(a.num_ + b.num_, QPolynomial(1), QRat::Reduced{});
    return QRat(a.num_ + b.num_, a.den_);
  }
  if (a.den_.degree() == 0 && b.den_.degree() == 0)
    return QRat(a.num_.scaled(b.den_.leading()) + b.num_.scaled(a.den_.leading()),
                QPolynomial(a.den_.leading() * b.den_.leading()));
  QPolynomial g = gcd(a.den_, b.den_);
  QPolynomial ad = g.degree() > 0 ? divide_exactly(a.den_, g) : a.den_;
  QPolynomial bd = g.degree() > 0 ? divide_exactly(b.den_, g) : b.den_;
  return QRat(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

QRat QRat::operator-() const { return QRat(-num_, den_, Reduced{}); }

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return QRat();
  const bool a_poly = a.den_.degree() == 0 && a.den_.leading() == 1;
  const bool b_poly = b.den_.degree() == 0 && b.den_.leading() == 1;
  if (a_poly && b_poly) return QRat(a.num_ * b.num_, QPolynomial(1), QRat::Reduced{});
  QPolynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (an.degree() > 0 && bd.degree() > 0) {
    QPolynomial g = gcd(an, bd);
    if (g.degree() > 0) {
      an = divide_exactly(an, g);
      bd = divide_exactly(bd, g);
    }
  }
  if (bn.degree() > 0 && ad.degree() > 0) {
    QPolynomial g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = divide_exactly(bn, g);
      ad = divide_exactly(ad, g);
    }
  }
  QRat out(an * bn, ad * bd, QRat::Reduced{});
  out.normalize_content_and_sign();
  return out;
}

QRat operator/(const QRat& a, const QRat& b) { return a * b.inverse(); }

std::strong_ordering operator<=>(const QRat& a, const QRat& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

QRat QRat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QRat out(1), base = *this;
  while (e) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

std::string QRat::str() const {
  const bool den_one = den_.degree() == 0 && den_.leading() == 1;
  if (den_one) return num_.str();
  auto wrap = [](const QPolynomial& p) {
    const int terms = static_cast<int>(std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                                     [](const Integer& x) { return x != 0; }));
    return terms > 1 ? "(" + p.str() + ")" : p.str();
  };
  return wrap(num_) + "/" + wrap(den_);
}

QRat q_factorial(int m, int step) {
  QRat out(1);
  for (int l = 1; l <= m; ++l) out *= QRat(1) - QRat::q_power(step * l);
  return out;
}

}  // namespace qmirror
