#pragma once

// Circuits, the two families of q-difference operators, the recursion that
// rebuilds I-function coefficients, and per-fixed-point mirror verification.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmirror/ifunction.hpp"

namespace qmirror {

struct Circuit {
  enum class Side { Kahler, Equivariant };  // ker beta, ker iota^T
  std::vector<int> mu;
  std::vector<int> plus;   // 0-based indices with mu = +1
  std::vector<int> minus;  // 0-based indices with mu = -1
  Side side = Side::Kahler;

  static Circuit from_vector(std::vector<int> mu, Side side);
  std::string str() const;
};

/// Nonzero kernel vectors with entries in {-1,0,1}, first nonzero entry +1, sorted.
std::vector<std::vector<int>> circuit_vectors(const IntMatrix& m);
/// Exhaustive search over {-1,0,1}^cols; the reference for circuit_vectors.
std::vector<std::vector<int>> circuit_vectors_brute_force(const IntMatrix& m);

std::vector<Circuit> circuits(const ToricDatum& x, Circuit::Side side);

/// Sum of c * monomial * q^{s . (v d/dv)} in normal order (shift acts first);
/// s is indexed by log-variable slot (z block, then a block).
class DifferenceOperator {
 public:
  using Key = std::pair<Monomial, std::vector<int>>;

  explicit DifferenceOperator(int n = 0) : n_(n) {}
  static DifferenceOperator identity(int n);
  static DifferenceOperator monomial(const Monomial& m, const QRat& c = 1);
  static DifferenceOperator shift(int n, Variable v, int s);

  int n() const { return n_; }
  const std::map<Key, QRat>& terms() const { return terms_; }
  void add_term(const Monomial& m, const std::vector<int>& shift, const QRat& c);

  /// Kahler and equivariant variables exchanged, q -> 1/q.
  DifferenceOperator tau() const;

  friend DifferenceOperator operator+(const DifferenceOperator& x, const DifferenceOperator& y);
  friend DifferenceOperator operator-(const DifferenceOperator& x, const DifferenceOperator& y);
  friend DifferenceOperator operator*(const DifferenceOperator& x, const DifferenceOperator& y);
  friend bool operator==(const DifferenceOperator&, const DifferenceOperator&) = default;

  std::string str() const;

 private:
  int n_;
  std::map<Key, QRat> terms_;
};

/// prod_{S+} z_i^{-1}(1 - q^{-z_i d/dz_i}) - prod_{S-} z_i^{-1}(1 - q^{-z_i d/dz_i})
DifferenceOperator kahler_operator(const Circuit& c);
/// prod_{R+} a_i^{-1}(1 - q^{a_i d/da_i}) - prod_{R-} a_i^{-1}(1 - q^{a_i d/da_i})
DifferenceOperator equivariant_operator(const Circuit& c);
/// q^{-z_i d/dz_i} + z_i q^{a_i d/da_i} - 1
DifferenceOperator linear_relation_operator(int n, int i);

Contribution apply(const DifferenceOperator& op, const Contribution& c);
/// Multiplies by exp(sum_i ln z_i ln a_i / ln q).
Contribution with_mirror_prefactor(const Contribution& c);

struct EquationCheck {
  bool pass = false;
  TruncationSpec window;
  std::vector<std::pair<Monomial, QRat>> residual;
};

/// True iff op(c) vanishes on its whole exact window.
bool linear_relation_check(const Contribution& c, int i);

/// Applies op to the modified I-function of p (with the mirror prefactor when
/// `mirror_prefactor`), computing the source on a window large enough that the
/// result is exact on the requested orders, and reports what survives there.
EquationCheck check_equation(const ToricDatum& x, const FixedPoint& p, const DifferenceOperator& op, Orders orders,
                             bool mirror_prefactor);

struct RecursionCheck {
  bool pass = false;
  std::size_t coefficients = 0;
  std::vector<std::vector<int>> mismatches;  // chart degrees m where recursion and series differ
};

/// Rebuilds the coefficients of constant_term * i_eff(x, p) degree by degree
/// from the column circuits of iota in the chart of p, and compares.
RecursionCheck uniqueness_recursion_check(const ToricDatum& x, const FixedPoint& p,
                                          const std::vector<Circuit>& circuit_list, Orders orders,
                                          const QRat& constant_term = 1);

struct CoefficientDiff {
  Monomial monomial;
  QRat primal;
  QRat dual;
};

struct PointReport {
  FixedPoint point;
  FixedPoint mirror;
  bool prefactor_equal = false;
  TruncationSpec window;
  std::vector<CoefficientDiff> diffs;
  bool pass = false;
};

struct MirrorReport {
  std::string datum;
  Orders orders;
  std::vector<PointReport> points;
  bool pass = false;
};

/// Compares the modified I-function of each p with exp(-sum ln z ln a / ln q)
/// times tau of the modified I-function of the paired point on the Gale dual.
/// The pairing defaults to complementation.
MirrorReport mirror_verify(const ToricDatum& x, Orders orders,
                           const std::optional<std::map<FixedPoint, FixedPoint>>& pairing = std::nullopt);

}  // namespace qmirror
