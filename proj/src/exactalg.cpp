#include "qmirror/exactalg.hpp"

#include <algorithm>
#include <utility>

#include "qmirror/error.hpp"

namespace qmirror {

namespace {

struct ExtendedGcd {
  Integer g, x, y;
};

// x*a + y*b = g >= 0
ExtendedGcd extended_gcd(Integer a, Integer b) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Integer q = a / b;
    Integer r = a - q * b;
    a = b;
    b = r;
    Integer t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

IntMatrix select_rows(const IntMatrix& m, const std::vector<int>& indices) {
  IntMatrix out(static_cast<Index>(indices.size()), m.cols());
  for (Index r = 0; r < out.rows(); ++r) out.row(r) = m.row(indices[r]);
  return out;
}

IntMatrix select_cols(const IntMatrix& m, const std::vector<int>& indices) {
  IntMatrix out(m.rows(), static_cast<Index>(indices.size()));
  for (Index c = 0; c < out.cols(); ++c) out.col(c) = m.col(indices[c]);
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const Index k = m.rows();
  if (k == 0) return Integer(1);
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (Index i = 0; i < k - 1; ++i) {
    if (a(i, i) == 0) {
      Index r = i + 1;
      while (r < k && a(r, i) == 0) ++r;
      if (r == k) return Integer(0);
      a.row(i).swap(a.row(r));
      sign = -sign;
    }
    for (Index r = i + 1; r < k; ++r) {
      for (Index c = i + 1; c < k; ++c) a(r, c) = (a(r, c) * a(i, i) - a(r, i) * a(i, c)) / prev;
      a(r, i) = 0;
    }
    prev = a(i, i);
  }
  return sign * a(k - 1, k - 1);
}

Index rank(const RatMatrix& m) {
  RatMatrix a = m;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(r).swap(a.row(p));
    for (Index i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Index rank(const IntMatrix& m) { return rank(to_rational(m)); }

SmithForm smith_normal_form(const IntMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  IntMatrix s = m;
  IntMatrix u = IntMatrix::Identity(rows, rows);
  IntMatrix v = IntMatrix::Identity(cols, cols);

  auto swap_rows = [&](Index a, Index b) {
    if (a == b) return;
    s.row(a).swap(s.row(b));
    u.row(a).swap(u.row(b));
  };
  auto swap_cols = [&](Index a, Index b) {
    if (a == b) return;
    s.col(a).swap(s.col(b));
    v.col(a).swap(v.col(b));
  };
  // row_a -= f * row_b
  auto row_axpy = [&](Index a, Index b, const Integer& f) {
    for (Index j = 0; j < cols; ++j) s(a, j) -= f * s(b, j);
    for (Index j = 0; j < rows; ++j) u(a, j) -= f * u(b, j);
  };
  auto col_axpy = [&](Index a, Index b, const Integer& f) {
    for (Index i = 0; i < rows; ++i) s(i, a) -= f * s(i, b);
    for (Index i = 0; i < cols; ++i) v(i, a) -= f * v(i, b);
  };

  Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block goes to the pivot
      Index bi = -1, bj = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (s(i, j) != 0 && (bi < 0 || abs(s(i, j)) < abs(s(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) goto finished;
      swap_rows(t, bi);
      swap_cols(t, bj);

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        row_axpy(i, t, s(i, t) / s(t, t));
        if (s(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        col_axpy(j, t, s(t, j) / s(t, t));
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(t, bad, Integer(-1));
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      u.row(t) = -u.row(t);
    }
  }
finished:
  SmithForm out{std::move(u), std::move(s), std::move(v), 0};
  Index r = 0;
  while (r < std::min(rows, cols) && out.diagonal(r, r) != 0) ++r;
  out.rank = r;
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const Index rows = h.rows(), cols = h.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    for (Index i = row + 1; i < rows; ++i) {
      if (h(i, col) == 0) continue;
      const Integer a = h(row, col), b = h(i, col);
      auto [g, x, y] = extended_gcd(a, b);
      const Integer ag = a / g, bg = b / g;
      for (Index j = 0; j < cols; ++j) {
        const Integer top = x * h(row, j) + y * h(i, j);
        const Integer bottom = -bg * h(row, j) + ag * h(i, j);
        h(row, j) = top;
        h(i, j) = bottom;
      }
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) h.row(row) = -h.row(row);
    for (Index i = 0; i < row; ++i) {
      const Integer f = floor_div(h(i, col), h(row, col));
      if (f != 0)
        for (Index j = 0; j < cols; ++j) h(i, j) -= f * h(row, j);
    }
    ++row;
  }
  return h.topRows(row);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  const Index nullity = m.cols() - snf.rank;
  if (nullity == 0) return IntMatrix(m.cols(), 0);
  const IntMatrix basis = snf.right.rightCols(nullity);
  return hermite_normal_form(basis.transpose()).transpose();
}

IntMatrix cokernel_map(const IntMatrix& iota) {
  if (rank(iota) < iota.cols())
    throw Error(ErrorKind::RankDeficient, "charge matrix " + to_string(iota) + " has rank below its column count");
  IntMatrix beta = integer_kernel(iota.transpose()).transpose();
  if (beta.rows() == 0) return IntMatrix(0, iota.rows());
  return beta;
}

std::vector<Integer> maximal_minors(const IntMatrix& m) {
  if (m.rows() < m.cols()) throw Error(ErrorKind::DimensionMismatch, "maximal minors need rows >= cols");
  std::vector<Integer> out;
  for (const auto& subset : combinations(static_cast<int>(m.rows()), static_cast<int>(m.cols())))
    out.push_back(determinant(select_rows(m, subset)));
  return out;
}

bool is_totally_unimodular(const IntMatrix& m) {
  if (m.rows() < m.cols()) return false;
  bool any_nonzero = false;
  for (const Integer& minor : maximal_minors(m)) {
    if (abs(minor) > 1) return false;
    if (minor != 0) any_nonzero = true;
  }
  return any_nonzero;
}

IntMatrix invert_unimodular(const IntMatrix& p) {
  if (p.rows() != p.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const Integer det = determinant(p);
  if (abs(det) != 1)
    throw Error(ErrorKind::NotUnimodular, "determinant " + det.str() + " of " + to_string(p));
  const Index k = p.rows();
  RatMatrix a = to_rational(p);
  RatMatrix inv = RatMatrix::Identity(k, k);
  for (Index c = 0; c < k; ++c) {
    Index r = c;
    while (a(r, c) == 0) ++r;
    a.row(c).swap(a.row(r));
    inv.row(c).swap(inv.row(r));
    const Rational piv = a(c, c);
    a.row(c) /= piv;
    inv.row(c) /= piv;
    for (Index i = 0; i < k; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      a.row(i) -= f * a.row(c);
      inv.row(i) -= f * inv.row(c);
    }
  }
  return to_integer(inv);
}

RatVector solve(const RatMatrix& a_in, const RatVector& b_in) {
  if (a_in.rows() != a_in.cols() || a_in.rows() != b_in.size())
    throw Error(ErrorKind::DimensionMismatch, "solve needs a square system");
  const Index k = a_in.rows();
  RatMatrix a = a_in;
  RatVector b = b_in;
  for (Index c = 0; c < k; ++c) {
    Index r = c;
    while (r < k && a(r, c) == 0) ++r;
    if (r == k) throw Error(ErrorKind::RankDeficient, "singular linear system");
    a.row(c).swap(a.row(r));
    std::swap(b(c), b(r));
    for (Index i = 0; i < k; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      a.row(i) -= f * a.row(c);
      b(i) -= f * b(c);
    }
  }
  RatVector x(k);
  for (Index i = 0; i < k; ++i) x(i) = b(i) / a(i, i);
  return x;
}

}  // namespace qmirror
