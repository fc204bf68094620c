#include "qmirror/series.hpp"

#include <algorithm>
#include <sstream>

#include "qmirror/error.hpp"

namespace qmirror {

Monomial::Monomial(std::vector<int> z_exp, std::vector<int> a_exp) : z(std::move(z_exp)), a(std::move(a_exp)) {
  if (z.size() != a.size()) throw Error(ErrorKind::DimensionMismatch, "monomial z and a blocks differ in length");
}

bool Monomial::is_one() const {
  return std::all_of(z.begin(), z.end(), [](int e) { return e == 0; }) &&
         std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::swapped() const { return Monomial(a, z); }

Monomial Monomial::pow(int e) const {
  Monomial out = *this;
  for (auto& x : out.z) x *= e;
  for (auto& x : out.a) x *= e;
  return out;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "monomials over different variable sets");
  Monomial out = x;
  for (int i = 0; i < x.size(); ++i) {
    out.z[i] += y.z[i];
    out.a[i] += y.a[i];
  }
  return out;
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char name, int i, int e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name << (i + 1);
    if (e != 1) os << "^" << e;
  };
  for (int i = 0; i < size(); ++i) emit('z', i, z[i]);
  for (int i = 0; i < size(); ++i) emit('a', i, a[i]);
  if (first) return "1";
  return os.str();
}

std::string Variable::str() const { return (side == Side::Z ? "z" : "a") + std::to_string(index + 1); }

namespace {

int dot(const std::vector<int>& w, const std::vector<int>& e) {
  if (w.size() != e.size()) throw Error(ErrorKind::DimensionMismatch, "grading and monomial differ in length");
  int s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * e[i];
  return s;
}

}  // namespace

int TruncationSpec::z_grade(const Monomial& m) const { return dot(z_weights, m.z); }
int TruncationSpec::a_grade(const Monomial& m) const { return dot(a_weights, m.a); }

bool TruncationSpec::contains(const Monomial& m) const { return z_grade(m) <= z_bound && a_grade(m) <= a_bound; }

bool TruncationSpec::same_grading(const TruncationSpec& o) const {
  return z_weights == o.z_weights && a_weights == o.a_weights;
}

TruncationSpec TruncationSpec::with_bounds(int z, int a) const {
  TruncationSpec out = *this;
  out.z_bound = z;
  out.a_bound = a;
  return out;
}

TruncationSpec TruncationSpec::swapped() const { return {a_weights, z_weights, a_bound, z_bound}; }

TruncatedSeries::TruncatedSeries(TruncationSpec spec, int z_floor, int a_floor)
    : spec_(std::move(spec)), z_floor_(z_floor), a_floor_(a_floor) {
  if (spec_.z_weights.size() != spec_.a_weights.size())
    throw Error(ErrorKind::DimensionMismatch, "z and a gradings differ in length");
}

TruncatedSeries TruncatedSeries::one(const TruncationSpec& spec) { return term(spec, Monomial(static_cast<int>(spec.z_weights.size()))); }

TruncatedSeries TruncatedSeries::term(const TruncationSpec& spec, const Monomial& m, const QRat& c) {
  TruncatedSeries out(spec, spec.z_grade(m), spec.a_grade(m));
  out.add_term(m, c);
  return out;
}

QRat TruncatedSeries::coefficient(const Monomial& m) const {
  if (!spec_.contains(m))
    throw Error(ErrorKind::OutOfTruncationRange, "monomial " + m.str() + " lies outside the truncation window");
  auto it = terms_.find(m);
  return it == terms_.end() ? QRat() : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, const QRat& c) {
  if (c.is_zero() || !spec_.contains(m)) return;
  if (spec_.z_grade(m) < z_floor_ || spec_.a_grade(m) < a_floor_)
    throw Error(ErrorKind::InvalidArgument, "term " + m.str() + " lies below the series floor");
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TruncatedSeries TruncatedSeries::truncated(int z_bound, int a_bound) const {
  TruncatedSeries out(spec_.with_bounds(std::min(z_bound, spec_.z_bound), std::min(a_bound, spec_.a_bound)),
                      z_floor_, a_floor_);
  for (const auto& [m, c] : terms_)
    if (out.spec_.contains(m)) out.terms_.emplace(m, c);
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const QRat& c) const {
  TruncatedSeries out(spec_, z_floor_, a_floor_);
  if (c.is_zero()) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace(m, x * c);
  return out;
}

TruncatedSeries TruncatedSeries::times_monomial(const Monomial& m, const QRat& c) const {
  const int gz = spec_.z_grade(m), ga = spec_.a_grade(m);
  TruncatedSeries out(spec_.with_bounds(spec_.z_bound + gz, spec_.a_bound + ga), z_floor_ + gz, a_floor_ + ga);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e * m, c.is_one() ? x : x * c);
  return out;
}

TruncatedSeries TruncatedSeries::shifted(Variable v, int s) const {
  if (s == 0) return *this;
  TruncatedSeries out(spec_, z_floor_, a_floor_);
  for (const auto& [m, x] : terms_) {
    const int e = v.exponent(m);
    out.terms_.emplace(m, e == 0 ? x : x * QRat::q_power(s * e));
  }
  return out;
}

TruncatedSeries TruncatedSeries::tau() const {
  TruncatedSeries out(spec_.swapped(), a_floor_, z_floor_);
  for (const auto& [m, x] : terms_) out.terms_.emplace(m.swapped(), x.invert_q());
  return out;
}

namespace {

void require_same_grading(const TruncatedSeries& x, const TruncatedSeries& y) {
  if (!x.spec().same_grading(y.spec()))
    throw Error(ErrorKind::SpecMismatch, "series carry different grading functionals");
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
  require_same_grading(x, y);
  const TruncationSpec spec =
      x.spec_.with_bounds(std::min(x.spec_.z_bound, y.spec_.z_bound), std::min(x.spec_.a_bound, y.spec_.a_bound));
  TruncatedSeries out(spec, std::min(x.z_floor_, y.z_floor_), std::min(x.a_floor_, y.a_floor_));
  for (const auto& [m, c] : x.terms_)
    if (spec.contains(m)) out.terms_.emplace(m, c);
  for (const auto& [m, c] : y.terms_)
    if (spec.contains(m)) out.add_term(m, c);
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const { return scaled(QRat(-1)); }

TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) { return x + (-y); }

TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
  require_same_grading(x, y);
  const int zb = std::min(x.spec_.z_bound + y.z_floor_, y.spec_.z_bound + x.z_floor_);
  const int ab = std::min(x.spec_.a_bound + y.a_floor_, y.spec_.a_bound + x.a_floor_);
  TruncatedSeries out(x.spec_.with_bounds(zb, ab), x.z_floor_ + y.z_floor_, x.a_floor_ + y.a_floor_);
  struct Graded {
    const Monomial* m;
    const QRat* c;
    int gz, ga;
  };
  auto graded = [](const TruncatedSeries& s) {
    std::vector<Graded> v;
    v.reserve(s.terms_.size());
    for (const auto& [m, c] : s.terms_) v.push_back({&m, &c, s.spec_.z_grade(m), s.spec_.a_grade(m)});
    return v;
  };
  const auto gx = graded(x), gy = graded(y);
  for (const auto& tx : gx)
    for (const auto& ty : gy) {
      if (tx.gz + ty.gz > zb || tx.ga + ty.ga > ab) continue;
      out.add_term(*tx.m * *ty.m, *tx.c * *ty.c);
    }
  return out;
}

LogPrefactor::LogPrefactor(int n) : n_(n), b_(RatMatrix::Zero(2 * n, 2 * n)) {}

LogPrefactor LogPrefactor::mirror_pairing(int n) {
  LogPrefactor out(n);
  for (int i = 0; i < n; ++i) out.add(Variable::z(i), Variable::a(i), Rational(1));
  return out;
}

bool LogPrefactor::is_zero() const {
  for (Index i = 0; i < b_.rows(); ++i)
    for (Index j = 0; j < b_.cols(); ++j)
      if (b_(i, j) != 0) return false;
  return true;
}

void LogPrefactor::add(Variable u, Variable v, const Rational& c) {
  const int x = u.slot(n_), y = v.slot(n_);
  if (x == y) {
    b_(x, x) += c;
    return;
  }
  const Rational half = c / 2;
  b_(x, y) += half;
  b_(y, x) += half;
}

LogPrefactor LogPrefactor::tau() const {
  LogPrefactor out(n_);
  auto swap_slot = [this](int s) { return s < n_ ? s + n_ : s - n_; };
  for (int i = 0; i < 2 * n_; ++i)
    for (int j = 0; j < 2 * n_; ++j) out.b_(swap_slot(i), swap_slot(j)) = -b_(i, j);
  return out;
}

LogPrefactor operator+(const LogPrefactor& x, const LogPrefactor& y) {
  if (x.n_ != y.n_) throw Error(ErrorKind::DimensionMismatch, "prefactors over different variable sets");
  LogPrefactor out(x.n_);
  out.b_ = x.b_ + y.b_;
  return out;
}

LogPrefactor LogPrefactor::operator-() const {
  LogPrefactor out(n_);
  out.b_ = -b_;
  return out;
}

LogPrefactor operator-(const LogPrefactor& x, const LogPrefactor& y) { return x + (-y); }

bool operator==(const LogPrefactor& x, const LogPrefactor& y) { return x.n_ == y.n_ && x.b_ == y.b_; }

Contribution shift_variables(const Contribution& c, const std::vector<int>& s) {
  const int n = c.prefactor.n();
  if (static_cast<int>(s.size()) != 2 * n) throw Error(ErrorKind::DimensionMismatch, "shift vector length");
  TruncatedSeries series = c.series;
  for (int slot = 0; slot < 2 * n; ++slot) {
    if (s[slot] == 0) continue;
    series = series.shifted(slot < n ? Variable::z(slot) : Variable::a(slot - n), s[slot]);
  }
  const RatMatrix& b = c.prefactor.matrix();
  Monomial mult(n);
  Rational q_exp = 0;
  for (int w = 0; w < 2 * n; ++w) {
    Rational e = 0;
    for (int v = 0; v < 2 * n; ++v)
      if (s[v] != 0) e += 2 * b(w, v) * s[v];
    if (s[w] != 0) q_exp += s[w] * e / 2;
    (w < n ? mult.z[w] : mult.a[w - n]) = to_int(e);
  }
  if (mult.is_one() && q_exp == 0) return {c.prefactor, series};
  return {c.prefactor, series.times_monomial(mult, QRat::q_power(to_int(q_exp)))};
}

Contribution shift_variable(const Contribution& c, Variable v, int s) {
  std::vector<int> vec(2 * c.prefactor.n(), 0);
  vec[v.slot(c.prefactor.n())] = s;
  return shift_variables(c, vec);
}

TruncatedSeries shift_variable(const TruncatedSeries& series, Variable v, int s) { return series.shifted(v, s); }

Contribution apply_tau(const Contribution& c) { return {c.prefactor.tau(), c.series.tau()}; }

}  // namespace qmirror
