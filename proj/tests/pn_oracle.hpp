#pragma once

// Closed forms for the projective spaces P^N, written straight from the
// Gaussian binomial expansion and independent of the general pipeline.

#include <map>
#include <vector>

#include "qmirror/qrat.hpp"
#include "qmirror/series.hpp"

namespace qmirror::testing {

inline QRat qp(int k) { return QRat::q_power(k); }

/// Gaussian binomial [n, k]_b at b = q^step: prod_{i=1}^{k} (1 - b^{n-k+i}) / (1 - b^i).
inline QRat gaussian_binomial(int n, int k, int step) {
  if (k < 0) return 0;
  QRat out = 1;
  for (int i = 1; i <= k; ++i) out = out * (QRat(1) - qp(step * (n - k + i))) / (QRat(1) - qp(step * i));
  return out;
}

/// [t^e] 1/(q^{-1} t; q^{-1})_d = q^{-e} [d + e - 1, e]_{q^{-1}}, with the d = 0 case 1 at e = 0.
inline QRat inverse_pochhammer_coefficient(int d, int e) {
  if (d == 0) return e == 0 ? QRat(1) : QRat(0);
  return qp(-e) * gaussian_binomial(d + e - 1, e, -1);
}

/// prod_{l=1}^{d} (1 - q^{-l})
inline QRat qinv_factorial(int d) {
  QRat out = 1;
  for (int l = 1; l <= d; ++l) out = out * (QRat(1) - qp(-l));
  return out;
}

/// prod_{l=1}^{d} (1 - q^{l})
inline QRat q_factorial_plain(int d) {
  QRat out = 1;
  for (int l = 1; l <= d; ++l) out = out * (QRat(1) - qp(l));
  return out;
}

inline void weak_compositions(int parts, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    cur.push_back(v);
    weak_compositions(parts, budget - v, cur, out);
    cur.pop_back();
  }
}

/// sum_d (z_1...z_{N+1})^d / prod_i (q^{-1} a_i/a_j; q^{-1})_d at p_j (0-based j), as a
/// coefficient map over d <= n_z and total a_i-degree (i != j) <= n_a.
inline std::map<Monomial, QRat> pn_effective_series(int n, int j, int n_z, int n_a) {
  std::map<Monomial, QRat> out;
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != j) others.push_back(i);
  std::vector<std::vector<int>> es;
  std::vector<int> cur;
  weak_compositions(static_cast<int>(others.size()), n_a, cur, es);
  for (int d = 0; d <= n_z; ++d) {
    const QRat base = QRat(1) / qinv_factorial(d);
    for (const auto& e : es) {
      QRat c = base;
      Monomial m(n);
      for (int i = 0; i < n; ++i) m.z[i] = d;
      for (std::size_t r = 0; r < others.size(); ++r) {
        c = c * inverse_pochhammer_coefficient(d, e[r]);
        m.a[others[r]] += e[r];
        m.a[j] -= e[r];
      }
      if (!c.is_zero()) out[m] = c;
    }
  }
  return out;
}

/// The plain I-function sum_d (z_1...z_{N+1})^d / prod_i (q a_j/a_i; q)_d at p_j, expanded in U_i = a_i/a_j:
/// 1/(q U^{-1}; q)_d = (-1)^d q^{-d(d+1)/2} U^d / (q^{-1} U; q^{-1})_d.
inline std::map<Monomial, QRat> pn_plain_series(int n, int j, int n_z, int n_a) {
  std::map<Monomial, QRat> out;
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != j) others.push_back(i);
  std::vector<std::vector<int>> es;
  std::vector<int> cur;
  weak_compositions(static_cast<int>(others.size()), n_a, cur, es);
  for (int d = 0; d <= n_z; ++d) {
    const QRat sign = d % 2 == 0 ? QRat(1) : QRat(-1);
    const QRat base = QRat(1) / q_factorial_plain(d);
    for (const auto& e : es) {
      int total = 0;
      for (int v : e) total += v + d;
      if (total > n_a) continue;
      QRat c = base;
      Monomial m(n);
      for (int i = 0; i < n; ++i) m.z[i] = d;
      for (std::size_t r = 0; r < others.size(); ++r) {
        c = c * sign * qp(-d * (d + 1) / 2) * inverse_pochhammer_coefficient(d, e[r]);
        m.a[others[r]] += d + e[r];
        m.a[j] -= d + e[r];
      }
      if (!c.is_zero()) out[m] = c;
    }
  }
  return out;
}

}  // namespace qmirror::testing
