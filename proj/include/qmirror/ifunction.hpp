#pragma once

// Fixed-point I-functions of a toric stack as truncated series: the level-l
// series, the effective-level series and its modified form with prefactor.

#include <vector>

#include "qmirror/pochhammer.hpp"
#include "qmirror/series.hpp"
#include "qmirror/toric.hpp"

namespace qmirror {

/// Truncation orders: N_z bounds the Kahler degree |m|, N_a the total degree in the U_i|_p.
struct Orders {
  int z = 3;
  int a = 3;
};

struct DegreeVector {
  std::vector<int> m;  // chart coordinates iota_p d, all >= 0
  std::vector<int> d;  // length k
  std::vector<int> D;  // iota d, length n
};

/// All d in Eff(p) with |iota_p d| <= n_z, lexicographic in m.
std::vector<DegreeVector> enumerate_degrees(const ToricDatum& x, const FixedPoint& p, int n_z);

/// z-grading sum_{j in p} zExp_j, a-grading sum_{i not in p} aExp_i.
TruncationSpec point_grading(const ToricDatum& x, const FixedPoint& p, Orders orders);

/// The monomials U_i|_p (a-block only), one per i not in p, ascending in i.
std::vector<Monomial> restriction_monomials(const ToricDatum& x, const FixedPoint& p);

/// -sum_{i not in p} ln z_i ln U_i|_p
LogPrefactor restriction_prefactor(const ToricDatum& x, const FixedPoint& p);

/// (-1)^D U^{-D} q^{D(D+1)/2}, the determinant-line factor of level one.
LinearFactorProduct level_factor(const Monomial& u, int degree);

struct FixedPointContribution {
  FixedPoint point;
  int level = 1;
  Contribution contribution;
  /// x for each factor 1/(x; q)_inf multiplying the degree sum (empty for i_function).
  std::vector<Monomial> infinite_factors;
  /// Expansion of the factors standing in front of the degree sum.
  TruncatedSeries outer;
  TruncatedSeries degree_sum;
};

struct LevelOptions {
  /// Multiply by prod (1 - U_i^{-1}) instead of dividing by it.
  bool direct_standing_factor = false;
};

struct ModifiedOptions {
  /// Use 1/(q U_i|_p)_inf in place of 1/(U_i|_p)_inf.
  bool q_shifted_infinite = false;
};

/// sum_d z^D / prod_i (q^{-1} U_i|_p; q^{-1})_{D_i}, expanded in the U_i|_p.
TruncatedSeries i_eff(const ToricDatum& x, const FixedPoint& p, Orders orders);

/// 1/prod_{i not in p}(1 - U_i^{-1}) * sum_d z^D L(D)^l / prod_i (q U_i^{-1}; q)_{D_i}.
FixedPointContribution i_function(const ToricDatum& x, const FixedPoint& p, int level, Orders orders,
                                  LevelOptions options = {});

/// Restriction prefactor, prod_{i not in p} 1/(U_i|_p)_inf and i_eff.
FixedPointContribution i_eff_modified(const ToricDatum& x, const FixedPoint& p, Orders orders,
                                      ModifiedOptions options = {});

std::vector<FixedPointContribution> i_eff_stack(const ToricDatum& x, Orders orders);

}  // namespace qmirror
