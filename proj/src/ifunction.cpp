#include "qmirror/ifunction.hpp"

#include <algorithm>
#include <functional>

#include "qmirror/error.hpp"
#include "qmirror/exactalg.hpp"

namespace qmirror {

namespace {

void compositions(int k, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    cur.push_back(v);
    compositions(k, budget - v, cur, out);
    cur.pop_back();
  }
}

// Adds c * zpart * prod_r u[r]^{k_r} f[r][k_r] over all k with sum k_r <= a_bound.
void accumulate(TruncatedSeries& out, const Monomial& zpart, const QRat& c, const std::vector<Monomial>& u,
                const std::vector<LaurentSeries>& f, int a_bound) {
  if (c.is_zero()) return;
  std::vector<int> tail_low(f.size() + 1, 0);
  for (size_t r = f.size(); r-- > 0;) tail_low[r] = tail_low[r + 1] + f[r].low;
  std::function<void(size_t, int, const Monomial&, const QRat&)> rec = [&](size_t r, int used, const Monomial& mono,
                                                                          const QRat& coef) {
    if (r == f.size()) {
      out.add_term(mono, coef);
      return;
    }
    const int top = std::min(f[r].top(), a_bound - used - tail_low[r + 1]);
    for (int k = f[r].low; k <= top; ++k) {
      const QRat& fk = f[r].coeffs[k - f[r].low];
      if (fk.is_zero()) continue;
      rec(r + 1, used + k, mono * u[r].pow(k), coef * fk);
    }
  };
  rec(0, 0, zpart, c);
}

Monomial z_monomial(int n, const std::vector<int>& D) {
  Monomial m(n);
  m.z = D;
  return m;
}

}  // namespace

std::vector<DegreeVector> enumerate_degrees(const ToricDatum& x, const FixedPoint& p, int n_z) {
  if (!is_fixed_point(x, p)) throw Error(ErrorKind::InvalidArgument, p.str() + " is not a fixed point");
  std::vector<DegreeVector> out;
  if (n_z < 0) return out;
  const IntMatrix pinv = invert_unimodular(chart(x, p));
  std::vector<std::vector<int>> ms;
  std::vector<int> cur;
  compositions(x.k, n_z, cur, ms);
  for (auto& m : ms) {
    IntVector mv(x.k);
    for (int j = 0; j < x.k; ++j) mv(j) = m[j];
    const IntVector d = pinv * mv;
    const IntVector big = x.iota * d;
    DegreeVector deg;
    deg.m = std::move(m);
    for (int j = 0; j < x.k; ++j) deg.d.push_back(to_int(d(j)));
    for (int i = 0; i < x.n; ++i) deg.D.push_back(to_int(big(i)));
    out.push_back(std::move(deg));
  }
  return out;
}

TruncationSpec point_grading(const ToricDatum& x, const FixedPoint& p, Orders orders) {
  TruncationSpec spec{std::vector<int>(x.n, 0), std::vector<int>(x.n, 0), orders.z, orders.a};
  for (int i = 0; i < x.n; ++i) (p.contains(i) ? spec.z_weights : spec.a_weights)[i] = 1;
  return spec;
}

std::vector<Monomial> restriction_monomials(const ToricDatum& x, const FixedPoint& p) {
  const RestrictionTable t = u_restriction(x, p);
  std::vector<Monomial> out;
  for (const auto& e : t.exponents) {
    Monomial m(x.n);
    m.a = e;
    out.push_back(std::move(m));
  }
  return out;
}

LogPrefactor restriction_prefactor(const ToricDatum& x, const FixedPoint& p) {
  const RestrictionTable t = u_restriction(x, p);
  LogPrefactor out(x.n);
  for (size_t r = 0; r < t.outside.size(); ++r)
    for (int j = 0; j < x.n; ++j)
      if (t.exponents[r][j] != 0) out.add(Variable::z(t.outside[r]), Variable::a(j), Rational(-t.exponents[r][j]));
  return out;
}

LinearFactorProduct level_factor(const Monomial& u, int degree) {
  const QRat sign(degree % 2 == 0 ? 1 : -1);
  LinearFactorProduct out(u, sign * QRat::q_power(degree * (degree + 1) / 2));
  out.multiply_power(-degree);
  return out;
}

TruncatedSeries i_eff(const ToricDatum& x, const FixedPoint& p, Orders orders) {
  const TruncationSpec spec = point_grading(x, p, orders);
  const std::vector<int> outside = p.complement(x.n);
  const std::vector<Monomial> u = restriction_monomials(x, p);
  const Monomial trivial(x.n);
  const QRat qinv = QRat::q_power(-1);
  TruncatedSeries out(spec);
  for (const auto& deg : enumerate_degrees(x, p, orders.z)) {
    QRat c(1);
    for (int j : p.indices) c *= pochhammer_finite(qinv, trivial, deg.D[j], -1).value().inverse();
    std::vector<LaurentSeries> f;
    for (size_t r = 0; r < outside.size(); ++r)
      f.push_back(pochhammer_finite(qinv, u[r], deg.D[outside[r]], -1).inverse().expand(orders.a));
    accumulate(out, z_monomial(x.n, deg.D), c, u, f, orders.a);
  }
  return out;
}

FixedPointContribution i_function(const ToricDatum& x, const FixedPoint& p, int level, Orders orders,
                                  LevelOptions options) {
  const TruncationSpec spec = point_grading(x, p, orders);
  const std::vector<int> outside = p.complement(x.n);
  const std::vector<Monomial> u = restriction_monomials(x, p);
  const Monomial trivial(x.n);
  const QRat q = QRat::q_power(1);

  std::vector<LinearFactorProduct> standing;
  for (const auto& ui : u) {
    LinearFactorProduct s(ui.inverse());
    s.multiply_linear(QRat(1), options.direct_standing_factor ? 1 : -1);
    standing.push_back(s.rebased(ui));
  }

  struct Term {
    Monomial z;
    QRat c;
    std::vector<LinearFactorProduct> factors;
  };
  std::vector<Term> terms;
  for (const auto& deg : enumerate_degrees(x, p, orders.z)) {
    QRat c(1);
    for (int j : p.indices) {
      const int dj = deg.D[j];
      const LinearFactorProduct f = level_factor(trivial, dj).pow(level) * pochhammer_finite(q, trivial, dj, 1).inverse();
      c *= f.value();
    }
    std::vector<LinearFactorProduct> factors;
    for (size_t r = 0; r < outside.size(); ++r) {
      const int di = deg.D[outside[r]];
      const LinearFactorProduct f = pochhammer_finite(q, u[r].inverse(), di, 1).inverse().rebased(u[r]);
      factors.push_back(level_factor(u[r], di).pow(level) * f);
    }
    terms.push_back({z_monomial(x.n, deg.D), c, std::move(factors)});
  }

  auto assemble = [&](bool with_standing) {
    int floor = 0;
    bool first = true;
    std::vector<std::vector<LaurentSeries>> expansions;
    for (const auto& t : terms) {
      std::vector<LinearFactorProduct> fs = t.factors;
      if (with_standing)
        for (size_t r = 0; r < fs.size(); ++r) fs[r] = fs[r] * standing[r];
      int total_low = 0;
      for (const auto& f : fs) total_low += f.power();
      floor = first ? total_low : std::min(floor, total_low);
      first = false;
      std::vector<LaurentSeries> ex;
      for (const auto& f : fs) ex.push_back(f.expand(orders.a - (total_low - f.power())));
      expansions.push_back(std::move(ex));
    }
    TruncatedSeries out(spec, 0, std::min(floor, 0));
    for (size_t i = 0; i < terms.size(); ++i) accumulate(out, terms[i].z, terms[i].c, u, expansions[i], orders.a);
    return out;
  };

  FixedPointContribution result;
  result.point = p;
  result.level = level;
  result.degree_sum = assemble(false);
  result.contribution = {LogPrefactor(x.n), assemble(true)};
  TruncatedSeries outer = TruncatedSeries::one(spec);
  for (const auto& s : standing) outer = outer * to_series(s, spec);
  result.outer = std::move(outer);
  return result;
}

FixedPointContribution i_eff_modified(const ToricDatum& x, const FixedPoint& p, Orders orders,
                                      ModifiedOptions options) {
  const TruncationSpec spec = point_grading(x, p, orders);
  FixedPointContribution result;
  result.point = p;
  result.level = 1;
  result.infinite_factors = restriction_monomials(x, p);
  const QRat scale = options.q_shifted_infinite ? QRat::q_power(1) : QRat(1);
  TruncatedSeries outer = TruncatedSeries::one(spec);
  for (const auto& ui : result.infinite_factors) outer = outer * inv_infinite_pochhammer(ui, spec, scale);
  result.outer = outer;
  result.degree_sum = i_eff(x, p, orders);
  result.contribution = {restriction_prefactor(x, p), outer * result.degree_sum};
  return result;
}

std::vector<FixedPointContribution> i_eff_stack(const ToricDatum& x, Orders orders) {
  std::vector<FixedPointContribution> out;
  for (const auto& p : fixed_points(x)) out.push_back(i_eff_modified(x, p, orders));
  return out;
}

}  // namespace qmirror
