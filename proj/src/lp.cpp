#include "qmirror/lp.hpp"

#include <optional>
#include <vector>

#include "qmirror/error.hpp"

namespace qmirror {

namespace {

class Tableau {
 public:
  Tableau(Index rows, Index cols) : t_(RatMatrix::Zero(rows + 1, cols + 1)), basis_(rows, -1) {}

  Rational& at(Index r, Index c) { return t_(r, c); }
  Rational& rhs(Index r) { return t_(r, t_.cols() - 1); }
  Index rows() const { return t_.rows() - 1; }
  Index cols() const { return t_.cols() - 1; }
  std::vector<Index>& basis() { return basis_; }

  void pivot(Index r, Index c) {
    const Rational p = t_(r, c);
    t_.row(r) /= p;
    for (Index i = 0; i < t_.rows(); ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rational f = t_(i, c);
      t_.row(i) -= f * t_.row(r);
    }
    basis_[r - 1] = c;
  }

  /// Runs simplex iterations on row 0 over columns [0, allowed). Returns false if unbounded.
  bool optimize(Index allowed) {
    while (true) {
      std::optional<Index> enter;
      for (Index j = 0; j < allowed; ++j)
        if (t_(0, j) < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<Index> leave;
      Rational best;
      for (Index i = 1; i <= rows(); ++i) {
        if (t_(i, *enter) <= 0) continue;
        Rational ratio = rhs(i) / t_(i, *enter);
        if (!leave || ratio < best || (ratio == best && basis_[i - 1] < basis_[*leave - 1])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

 private:
  RatMatrix t_;
  std::vector<Index> basis_;
};

}  // namespace

LpResult maximize(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  const Index m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n) throw Error(ErrorKind::DimensionMismatch, "linear program dimensions");
  Tableau t(m, n + m);
  for (Index i = 0; i < m; ++i) {
    const Rational sign = b(i) < 0 ? -1 : 1;
    for (Index j = 0; j < n; ++j) t.at(i + 1, j) = sign * a(i, j);
    t.at(i + 1, n + i) = 1;
    t.rhs(i + 1) = sign * b(i);
    t.basis()[i] = n + i;
  }
  for (Index j = 0; j <= n + m; ++j) {
    Rational s = 0;
    if (j < n || j == n + m)
      for (Index i = 1; i <= m; ++i) s += (j == n + m) ? t.rhs(i) : t.at(i, j);
    if (j < n) t.at(0, j) = -s;
    if (j == n + m) t.rhs(0) = -s;
  }
  t.optimize(n + m);
  LpResult result;
  if (t.rhs(0) != 0) return result;  // phase-one optimum -sum(artificials) < 0

  for (Index i = 1; i <= m; ++i) {
    if (t.basis()[i - 1] < n) continue;
    for (Index j = 0; j < n; ++j)
      if (t.at(i, j) != 0) {
        t.pivot(i, j);
        break;
      }
  }
  for (Index j = 0; j <= n + m; ++j) t.at(0, j) = 0;
  for (Index j = 0; j < n; ++j) t.at(0, j) = -c(j);
  for (Index i = 1; i <= m; ++i) {
    const Index bj = t.basis()[i - 1];
    if (bj >= n || t.at(0, bj) == 0) continue;
    const Rational f = t.at(0, bj);
    for (Index j = 0; j <= n + m; ++j) t.at(0, j) -= f * t.at(i, j);
  }
  if (!t.optimize(n)) {
    result.status = LpResult::Status::Unbounded;
    return result;
  }
  result.status = LpResult::Status::Optimal;
  result.value = t.rhs(0);
  result.x = RatVector::Zero(n);
  for (Index i = 1; i <= m; ++i)
    if (t.basis()[i - 1] < n) result.x(t.basis()[i - 1]) = t.rhs(i);
  return result;
}

}  // namespace qmirror
