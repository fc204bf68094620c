#pragma once

// Toric data 0 -> Z^k --iota--> Z^n --beta--> Z^d -> 0 and the combinatorics of
// the associated toric stack: fixed points, cones, chambers, restrictions.

#include <string>
#include <vector>

#include "qmirror/scalar.hpp"

namespace qmirror {

struct ToricDatum {
  IntMatrix iota;  // n x k
  IntMatrix beta;  // d x n
  int n = 0;
  int k = 0;
  int d = 0;
  std::string name;
};

/// Checks rank and total unimodularity, and derives beta = cokernel_map(iota).
ToricDatum validate(const IntMatrix& iota, std::string name = {});
/// As above, but adopts a caller-supplied beta after checking it is a cokernel map of iota.
ToricDatum validate(const IntMatrix& iota, const IntMatrix& beta, std::string name = {});

/// iota^! = beta^T, beta^! = iota^T.
ToricDatum gale_dual(const ToricDatum& x);

/// A size-k subset of {0..n-1}, stored sorted and 0-based; printed 1-based.
struct FixedPoint {
  std::vector<int> indices;

  static FixedPoint from_one_based(std::vector<int> one_based);
  std::vector<int> one_based() const;
  bool contains(int i) const;
  /// Indices of {0..n-1} not in the subset, ascending.
  std::vector<int> complement(int n) const;
  std::string str() const;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
};

std::vector<FixedPoint> fixed_points(const ToricDatum& x);
bool is_fixed_point(const ToricDatum& x, const FixedPoint& p);
FixedPoint mirror_fixed_point(const FixedPoint& p, int n);

/// The k x k submatrix of iota on the rows of p.
IntMatrix chart(const ToricDatum& x, const FixedPoint& p);

struct RationalCone {
  std::vector<RatVector> generators;
  bool open = false;
  Index dim = 0;
};

RationalCone kahler_cone(const ToricDatum& x, const FixedPoint& p);
RationalCone attracting_cone(const ToricDatum& x, const FixedPoint& p);
RationalCone effective_cone(const ToricDatum& x, const FixedPoint& p);
/// Eff(p) through its inequalities (iota d)_i >= 0, i in p.
bool in_effective_cone(const ToricDatum& x, const FixedPoint& p, const RatVector& deg);

bool cone_contains(const RationalCone& c, const RatVector& v, bool strict);
/// Mutual generator containment of the closures.
bool same_cone(const RationalCone& c1, const RationalCone& c2);

/// theta lies on a face of codimension >= 1 of some Kahler cone.
bool on_wall(const ToricDatum& x, const RatVector& theta);
std::vector<FixedPoint> quotient_fixed_points(const ToricDatum& x, const RatVector& theta);

struct Chamber {
  RationalCone cone;
  RatVector sample;
  std::vector<FixedPoint> points;
};

/// Chambers with nonempty fixed loci, for k <= 2.
std::vector<Chamber> chambers(const ToricDatum& x);

RatVector lift_cocharacter(const ToricDatum& x, const FixedPoint& p, const RatVector& sigma);
bool is_minimal(const ToricDatum& x, const FixedPoint& p, const RatVector& sigma);

struct RestrictionTable {
  FixedPoint point;
  std::vector<int> outside;  // i not in p, ascending
  IntMatrix c;               // Q P^{-1}: rows follow `outside`, columns follow p
  /// Exponent vector (length n) of U_i|_p = a_i prod_{j in p} a_j^{-C_ij}, one per entry of `outside`.
  std::vector<std::vector<int>> exponents;
};

RestrictionTable u_restriction(const ToricDatum& x, const FixedPoint& p);

std::vector<Rational> effective_levels(const ToricDatum& x);

}  // namespace qmirror
