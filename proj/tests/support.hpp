#pragma once

#include <random>

#include "qmirror/exactalg.hpp"
#include "qmirror/qrat.hpp"
#include "qmirror/series.hpp"
#include "qmirror/toric.hpp"

namespace qmirror::testing {

inline ToricDatum p1() { return validate(make_int_matrix({{1}, {1}}), "P1"); }
inline ToricDatum p2() { return validate(make_int_matrix({{1}, {1}, {1}}), "P2"); }
inline ToricDatum blp2() { return validate(make_int_matrix({{1, 1}, {0, 1}, {1, 0}, {0, 1}}), "Bl(P2)"); }
inline ToricDatum blp2_dual() { return gale_dual(blp2()); }

inline FixedPoint fp(std::vector<int> one_based) { return FixedPoint::from_one_based(std::move(one_based)); }

inline std::vector<std::vector<int>> one_based(const std::vector<FixedPoint>& pts) {
  std::vector<std::vector<int>> out;
  for (const auto& p : pts) out.push_back(p.one_based());
  return out;
}

inline RatVector rv(std::vector<long> v) {
  RatVector out(static_cast<Index>(v.size()));
  for (Index i = 0; i < out.size(); ++i) out(i) = Rational(v[i]);
  return out;
}

inline Monomial zmono(std::vector<int> z) {
  Monomial m(static_cast<int>(z.size()));
  m.z = std::move(z);
  return m;
}

inline Monomial amono(std::vector<int> a) {
  Monomial m(static_cast<int>(a.size()));
  m.a = std::move(a);
  return m;
}

inline QPolynomial random_polynomial(std::mt19937& rng, int max_degree, int max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree), coeff(-max_coeff, max_coeff);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& x : c) x = coeff(rng);
  return QPolynomial(std::move(c));
}

inline QRat random_qrat(std::mt19937& rng, int max_degree = 4, int max_coeff = 5) {
  QPolynomial den;
  do den = random_polynomial(rng, max_degree, max_coeff);
  while (den.is_zero());
  return QRat(random_polynomial(rng, max_degree, max_coeff), den);
}

/// Random series in the window of spec: up to `terms` monomials with exponents in [lo, hi].
inline TruncatedSeries random_series(std::mt19937& rng, const TruncationSpec& spec, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi);
  const int n = static_cast<int>(spec.z_weights.size());
  TruncatedSeries s(spec, lo * n, lo * n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (int i = 0; i < n; ++i) {
      m.z[i] = e(rng);
      m.a[i] = e(rng);
    }
    s.add_term(m, random_qrat(rng, 2, 3));
  }
  return s;
}

}  // namespace qmirror::testing
