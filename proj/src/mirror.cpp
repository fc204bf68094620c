#include "qmirror/mirror.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qmirror/error.hpp"
#include "qmirror/exactalg.hpp"

namespace qmirror {

Circuit Circuit::from_vector(std::vector<int> mu, Side side) {
  Circuit c;
  c.side = side;
  for (int i = 0; i < static_cast<int>(mu.size()); ++i) {
    if (mu[i] == 1) c.plus.push_back(i);
    else if (mu[i] == -1) c.minus.push_back(i);
    else if (mu[i] != 0) throw Error(ErrorKind::InvalidArgument, "circuit entries must lie in {-1,0,1}");
  }
  if (c.plus.empty() && c.minus.empty()) throw Error(ErrorKind::InvalidArgument, "zero circuit");
  c.mu = std::move(mu);
  return c;
}

std::string Circuit::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
  os << ")";
  return os.str();
}

namespace {

bool canonical_sign(std::vector<int>& v) {
  for (int e : v) {
    if (e == 0) continue;
    if (e < 0)
      for (int& x : v) x = -x;
    return true;
  }
  return false;
}

bool in_kernel(const IntMatrix& m, const std::vector<int>& v) {
  for (Index r = 0; r < m.rows(); ++r) {
    Integer s = 0;
    for (Index c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    if (s != 0) return false;
  }
  return true;
}

// Calls f on every vector of {-1,0,1}^len.
template <typename F>
void for_each_ternary(int len, F&& f) {
  std::vector<int> v(len, -1);
  while (true) {
    f(v);
    int i = len - 1;
    while (i >= 0 && v[i] == 1) v[i--] = -1;
    if (i < 0) return;
    ++v[i];
  }
}

}  // namespace

std::vector<std::vector<int>> circuit_vectors_brute_force(const IntMatrix& m) {
  std::set<std::vector<int>> found;
  for_each_ternary(static_cast<int>(m.cols()), [&](const std::vector<int>& v) {
    std::vector<int> w = v;
    if (!canonical_sign(w) || w != v) return;
    if (in_kernel(m, w)) found.insert(w);
  });
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> circuit_vectors(const IntMatrix& m) {
  const IntMatrix basis = integer_kernel(m);
  const int n = static_cast<int>(m.cols()), r = static_cast<int>(basis.cols());
  if (r == 0) return {};
  std::optional<std::vector<int>> rows;
  for (const auto& s : combinations(n, r))
    if (abs(determinant(select_rows(basis, s))) == 1) {
      rows = s;
      break;
    }
  if (!rows) return circuit_vectors_brute_force(m);
  // In the re-charted basis a kernel vector's coordinates are its entries on `rows`.
  const IntMatrix charted = basis * invert_unimodular(select_rows(basis, *rows));
  std::set<std::vector<int>> found;
  for_each_ternary(r, [&](const std::vector<int>& c) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) {
      Integer s = 0;
      for (int j = 0; j < r; ++j) s += charted(i, j) * c[j];
      if (abs(s) > 1) return;
      v[i] = s.convert_to<int>();
    }
    if (canonical_sign(v)) found.insert(v);
  });
  return {found.begin(), found.end()};
}

std::vector<Circuit> circuits(const ToricDatum& x, Circuit::Side side) {
  const IntMatrix m = side == Circuit::Side::Kahler ? x.beta : IntMatrix(x.iota.transpose());
  std::vector<Circuit> out;
  for (auto& v : circuit_vectors(m)) out.push_back(Circuit::from_vector(std::move(v), side));
  return out;
}

DifferenceOperator DifferenceOperator::identity(int n) {
  DifferenceOperator op(n);
  op.add_term(Monomial(n), std::vector<int>(2 * n, 0), QRat(1));
  return op;
}

DifferenceOperator DifferenceOperator::monomial(const Monomial& m, const QRat& c) {
  DifferenceOperator op(m.size());
  op.add_term(m, std::vector<int>(2 * m.size(), 0), c);
  return op;
}

DifferenceOperator DifferenceOperator::shift(int n, Variable v, int s) {
  DifferenceOperator op(n);
  std::vector<int> sh(2 * n, 0);
  sh[v.slot(n)] = s;
  op.add_term(Monomial(n), sh, QRat(1));
  return op;
}

void DifferenceOperator::add_term(const Monomial& m, const std::vector<int>& shift, const QRat& c) {
  if (m.size() != n_ || static_cast<int>(shift.size()) != 2 * n_)
    throw Error(ErrorKind::DimensionMismatch, "operator term over a different variable set");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{m, shift}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DifferenceOperator DifferenceOperator::tau() const {
  DifferenceOperator out(n_);
  for (const auto& [key, c] : terms_) {
    std::vector<int> sh(2 * n_);
    for (int i = 0; i < n_; ++i) {
      sh[i] = -key.second[n_ + i];
      sh[n_ + i] = -key.second[i];
    }
    out.add_term(key.first.swapped(), sh, c.invert_q());
  }
  return out;
}

DifferenceOperator operator+(const DifferenceOperator& x, const DifferenceOperator& y) {
  if (x.n_ != y.n_) throw Error(ErrorKind::DimensionMismatch, "operators over different variable sets");
  DifferenceOperator out = x;
  for (const auto& [key, c] : y.terms_) out.add_term(key.first, key.second, c);
  return out;
}

DifferenceOperator operator-(const DifferenceOperator& x, const DifferenceOperator& y) {
  DifferenceOperator out = x;
  for (const auto& [key, c] : y.terms_) out.add_term(key.first, key.second, -c);
  return out;
}

DifferenceOperator operator*(const DifferenceOperator& x, const DifferenceOperator& y) {
  if (x.n_ != y.n_) throw Error(ErrorKind::DimensionMismatch, "operators over different variable sets");
  const int n = x.n_;
  DifferenceOperator out(n);
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_) {
      int qexp = 0;
      for (int i = 0; i < n; ++i) qexp += kx.second[i] * ky.first.z[i] + kx.second[n + i] * ky.first.a[i];
      std::vector<int> sh(2 * n);
      for (int s = 0; s < 2 * n; ++s) sh[s] = kx.second[s] + ky.second[s];
      out.add_term(kx.first * ky.first, sh, cx * cy * QRat::q_power(qexp));
    }
  return out;
}

std::string DifferenceOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << key.first.str();
    for (int s = 0; s < 2 * n_; ++s) {
      if (key.second[s] == 0) continue;
      const Variable v = s < n_ ? Variable::z(s) : Variable::a(s - n_);
      os << "*T[" << v.str() << "]^" << key.second[s];
    }
  }
  return os.str();
}

namespace {

DifferenceOperator circuit_product(int n, const std::vector<int>& support, Variable::Side side) {
  DifferenceOperator out = DifferenceOperator::identity(n);
  for (int i : support) {
    Monomial inv(n);
    const Variable v{side, i};
    (side == Variable::Side::Z ? inv.z : inv.a)[i] = -1;
    const int s = side == Variable::Side::Z ? -1 : 1;
    out = out * (DifferenceOperator::monomial(inv) *
                 (DifferenceOperator::identity(n) - DifferenceOperator::shift(n, v, s)));
  }
  return out;
}

}  // namespace

DifferenceOperator kahler_operator(const Circuit& c) {
  if (c.side != Circuit::Side::Kahler) throw Error(ErrorKind::InvalidArgument, "Kahler operator needs a ker(beta) circuit");
  const int n = static_cast<int>(c.mu.size());
  return circuit_product(n, c.plus, Variable::Side::Z) - circuit_product(n, c.minus, Variable::Side::Z);
}

DifferenceOperator equivariant_operator(const Circuit& c) {
  if (c.side != Circuit::Side::Equivariant)
    throw Error(ErrorKind::InvalidArgument, "equivariant operator needs a ker(iota^T) circuit");
  const int n = static_cast<int>(c.mu.size());
  return circuit_product(n, c.plus, Variable::Side::A) - circuit_product(n, c.minus, Variable::Side::A);
}

DifferenceOperator linear_relation_operator(int n, int i) {
  Monomial zi(n);
  zi.z[i] = 1;
  return DifferenceOperator::shift(n, Variable::z(i), -1) +
         DifferenceOperator::monomial(zi) * DifferenceOperator::shift(n, Variable::a(i), 1) -
         DifferenceOperator::identity(n);
}

Contribution apply(const DifferenceOperator& op, const Contribution& c) {
  if (op.n() != c.prefactor.n()) throw Error(ErrorKind::DimensionMismatch, "operator and contribution differ in n");
  std::optional<TruncatedSeries> sum;
  for (const auto& [key, coef] : op.terms()) {
    TruncatedSeries part = shift_variables(c, key.second).series.times_monomial(key.first, coef);
    sum = sum ? *sum + part : part;
  }
  if (!sum) return {c.prefactor, TruncatedSeries(c.series.spec())};
  return {c.prefactor, *sum};
}

Contribution with_mirror_prefactor(const Contribution& c) {
  return {c.prefactor + LogPrefactor::mirror_pairing(c.prefactor.n()), c.series};
}

bool linear_relation_check(const Contribution& c, int i) {
  const Contribution r = apply(linear_relation_operator(c.prefactor.n(), i), c);
  if (r.series.spec().z_bound < 0 || r.series.spec().a_bound < 0)
    throw Error(ErrorKind::TruncationUnderflow, "no exact coefficients survive the operator");
  return r.series.is_zero();
}

EquationCheck check_equation(const ToricDatum& x, const FixedPoint& p, const DifferenceOperator& op, Orders orders,
                             bool mirror_prefactor) {
  LogPrefactor pref = restriction_prefactor(x, p);
  if (mirror_prefactor) pref = pref + LogPrefactor::mirror_pairing(x.n);
  const TruncationSpec target = point_grading(x, p, orders);
  const Contribution probe = apply(op, Contribution{pref, TruncatedSeries(target)});
  const Orders source{orders.z + std::max(0, orders.z - probe.series.spec().z_bound),
                      orders.a + std::max(0, orders.a - probe.series.spec().a_bound)};
  Contribution c = i_eff_modified(x, p, source).contribution;
  if (mirror_prefactor) c = with_mirror_prefactor(c);
  const Contribution r = apply(op, c);
  if (r.series.spec().z_bound < orders.z || r.series.spec().a_bound < orders.a)
    throw Error(ErrorKind::TruncationUnderflow, "operator result is exact only below the requested window");
  EquationCheck out;
  const TruncatedSeries t = r.series.truncated(orders.z, orders.a);
  out.window = t.spec();
  for (const auto& [m, v] : t.terms()) out.residual.emplace_back(m, v);
  out.pass = out.residual.empty();
  return out;
}

RecursionCheck uniqueness_recursion_check(const ToricDatum& x, const FixedPoint& p,
                                          const std::vector<Circuit>& circuit_list, Orders orders,
                                          const QRat& constant_term) {
  const RestrictionTable table = u_restriction(x, p);
  const std::vector<Monomial> u = restriction_monomials(x, p);
  const TruncationSpec spec = point_grading(x, p, orders);
  const int k = x.k;

  // Column j of iota P^{-1} is the circuit driving the step m - e_j -> m.
  std::vector<std::vector<int>> column(k);
  for (int j = 0; j < k; ++j) {
    std::vector<int> col(x.n, 0);
    col[p.indices[j]] = 1;
    for (size_t r = 0; r < table.outside.size(); ++r)
      col[table.outside[r]] = to_int(table.c(static_cast<Index>(r), j));
    std::vector<int> neg = col;
    for (int& e : neg) e = -e;
    bool present = false;
    for (const auto& c : circuit_list)
      if (c.side == Circuit::Side::Kahler && (c.mu == col || c.mu == neg)) present = true;
    if (!present) {
      std::ostringstream os;
      os << "circuit list lacks the chart column " << Circuit::from_vector(col, Circuit::Side::Kahler).str() << " of "
         << p.str();
      throw Error(ErrorKind::InvalidArgument, os.str());
    }
    column[j] = std::move(col);
  }

  const std::vector<DegreeVector> degrees = enumerate_degrees(x, p, orders.z);
  std::map<std::vector<int>, std::vector<int>> big_d;
  for (const auto& deg : degrees) big_d[deg.m] = deg.D;

  const TruncatedSeries direct = i_eff(x, p, orders);
  std::map<std::vector<int>, TruncatedSeries> slices;
  for (const auto& deg : degrees) slices.emplace(deg.m, TruncatedSeries(spec));
  for (const auto& [mono, c] : direct.terms()) {
    auto it = std::find_if(degrees.begin(), degrees.end(), [&](const DegreeVector& d) { return d.D == mono.z; });
    if (it == degrees.end()) throw Error(ErrorKind::InvalidArgument, "series term outside the degree support");
    Monomial a_part(x.n);
    a_part.a = mono.a;
    slices.at(it->m).add_term(a_part, c * constant_term);
  }

  std::vector<DegreeVector> order = degrees;
  std::stable_sort(order.begin(), order.end(), [](const DegreeVector& a, const DegreeVector& b) {
    int sa = 0, sb = 0;
    for (int v : a.m) sa += v;
    for (int v : b.m) sb += v;
    return sa < sb;
  });

  auto linear = [&](const Monomial& ui, int qexp) {
    TruncatedSeries s = TruncatedSeries::one(spec);
    s.add_term(ui, -QRat::q_power(qexp));
    return s;
  };

  std::map<std::vector<int>, TruncatedSeries> rebuilt;
  RecursionCheck out;
  for (const auto& deg : order) {
    if (std::all_of(deg.m.begin(), deg.m.end(), [](int v) { return v == 0; })) {
      rebuilt.emplace(deg.m, TruncatedSeries::one(spec).scaled(constant_term));
    } else {
      std::optional<TruncatedSeries> value;
      for (int j = 0; j < k; ++j) {
        if (deg.m[j] == 0) continue;
        std::vector<int> prev_m = deg.m;
        --prev_m[j];
        const std::vector<int>& prev_d = big_d.at(prev_m);
        const QRat f0 = QRat(1) - QRat::q_power(-deg.m[j]);
        if (f0.is_zero())
          throw Error(ErrorKind::HypothesisViolated, "leading recursion factor vanishes at " + p.str());
        TruncatedSeries f = rebuilt.at(prev_m).scaled(f0.inverse());
        for (size_t r = 0; r < table.outside.size(); ++r) {
          const int i = table.outside[r];
          const int mu = column[j][i];
          if (u[r].is_one()) throw Error(ErrorKind::HypothesisViolated, "trivial restriction monomial");
          // (q^{-1}U; q^{-1})_{D+1} = (q^{-1}U; q^{-1})_D (1 - U q^{-(D+1)}).
          for (int t = 1; t <= mu; ++t) f = f * expand_inverse_linear(u[r], QRat::q_power(-(prev_d[i] + t)), spec);
          for (int t = 0; t < -mu; ++t) f = f * linear(u[r], -(prev_d[i] - t));
        }
        if (!value) value = f;
        else if (!(*value == f)) out.mismatches.push_back(deg.m);
      }
      rebuilt.emplace(deg.m, *value);
    }
    ++out.coefficients;
    const TruncatedSeries& got = rebuilt.at(deg.m);
    if (!(got.terms() == slices.at(deg.m).terms())) out.mismatches.push_back(deg.m);
  }
  std::sort(out.mismatches.begin(), out.mismatches.end());
  out.mismatches.erase(std::unique(out.mismatches.begin(), out.mismatches.end()), out.mismatches.end());
  out.pass = out.mismatches.empty();
  return out;
}

MirrorReport mirror_verify(const ToricDatum& x, Orders orders,
                           const std::optional<std::map<FixedPoint, FixedPoint>>& pairing) {
  const ToricDatum dual = gale_dual(x);
  MirrorReport report;
  report.datum = x.name;
  report.orders = orders;
  report.pass = true;
  const LogPrefactor pairing_form = LogPrefactor::mirror_pairing(x.n);
  for (const auto& p : fixed_points(x)) {
    PointReport pr;
    pr.point = p;
    if (pairing) {
      auto it = pairing->find(p);
      if (it == pairing->end()) throw Error(ErrorKind::InvalidArgument, "pairing has no partner for " + p.str());
      pr.mirror = it->second;
    } else {
      pr.mirror = mirror_fixed_point(p, x.n);
    }
    const Contribution primal = i_eff_modified(x, p, orders).contribution;
    Contribution image = apply_tau(i_eff_modified(dual, pr.mirror, Orders{orders.a, orders.z}).contribution);
    image.prefactor = image.prefactor - pairing_form;

    pr.prefactor_equal = primal.prefactor == image.prefactor;
    const TruncationSpec& a = primal.series.spec();
    const TruncationSpec& b = image.series.spec();
    if (a.same_grading(b) && !(a == b))
      throw Error(ErrorKind::TruncationMismatch, "primal and dual windows differ at " + p.str());
    pr.window = a;
    std::set<Monomial> support;
    for (const auto& [m, c] : primal.series.terms()) support.insert(m);
    for (const auto& [m, c] : image.series.terms()) support.insert(m);
    for (const auto& m : support) {
      if (!a.contains(m) || !b.contains(m)) continue;
      QRat lhs = primal.series.coefficient(m), rhs = image.series.coefficient(m);
      if (!(lhs == rhs)) pr.diffs.push_back({m, std::move(lhs), std::move(rhs)});
    }
    pr.pass = pr.prefactor_equal && pr.diffs.empty();
    report.pass = report.pass && pr.pass;
    report.points.push_back(std::move(pr));
  }
  return report;
}

}  // namespace qmirror
