#include "qmirror/toric.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qmirror/error.hpp"
#include "qmirror/exactalg.hpp"
#include "qmirror/lp.hpp"

namespace qmirror {

namespace {

std::string subset_str(const std::vector<int>& zero_based) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < zero_based.size(); ++i) os << (i ? "," : "") << zero_based[i] + 1;
  os << "}";
  return os.str();
}

void check_charge_matrix(const IntMatrix& iota) {
  if (iota.rows() == 0 || iota.cols() == 0 || iota.rows() < iota.cols())
    throw Error(ErrorKind::DimensionMismatch,
                "charge matrix must be n x k with n >= k >= 1, got " + std::to_string(iota.rows()) + " x " +
                    std::to_string(iota.cols()));
  if (rank(iota) < iota.cols())
    throw Error(ErrorKind::RankDeficient, "charge matrix " + to_string(iota) + " has rank below its column count");
  const auto subsets = combinations(static_cast<int>(iota.rows()), static_cast<int>(iota.cols()));
  for (const auto& s : subsets) {
    const Integer minor = determinant(select_rows(iota, s));
    if (abs(minor) > 1)
      throw Error(ErrorKind::NotTotallyUnimodular,
                  "row subset " + subset_str(s) + " of " + to_string(iota) + " has minor " + minor.str());
  }
}

ToricDatum assemble(const IntMatrix& iota, const IntMatrix& beta, std::string name) {
  ToricDatum x;
  x.iota = iota;
  x.beta = beta;
  x.n = static_cast<int>(iota.rows());
  x.k = static_cast<int>(iota.cols());
  x.d = x.n - x.k;
  x.name = std::move(name);
  return x;
}

RatVector rat_row(const IntMatrix& m, Index r) {
  RatVector v(m.cols());
  for (Index j = 0; j < m.cols(); ++j) v(j) = Rational(m(r, j));
  return v;
}

RatVector rat_col(const IntMatrix& m, Index c) {
  RatVector v(m.rows());
  for (Index i = 0; i < m.rows(); ++i) v(i) = Rational(m(i, c));
  return v;
}

// theta = P^T c; returns c.
RatVector chart_coordinates(const ToricDatum& x, const FixedPoint& p, const RatVector& theta) {
  return solve(to_rational(IntMatrix(chart(x, p).transpose())), theta);
}

}  // namespace

ToricDatum validate(const IntMatrix& iota, std::string name) {
  check_charge_matrix(iota);
  return assemble(iota, cokernel_map(iota), std::move(name));
}

ToricDatum validate(const IntMatrix& iota, const IntMatrix& beta, std::string name) {
  check_charge_matrix(iota);
  const Index n = iota.rows(), d = iota.rows() - iota.cols();
  if (beta.rows() != d || beta.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "beta must be " + std::to_string(d) + " x " + std::to_string(n));
  if (!(beta * iota).isZero()) throw Error(ErrorKind::InvalidArgument, "beta * iota is not zero");
  if (d > 0) {
    if (rank(beta) < d) throw Error(ErrorKind::RankDeficient, "beta " + to_string(beta) + " is not of full rank");
    const IntMatrix bt = beta.transpose();
    Integer g = 0;
    for (const auto& m : maximal_minors(bt)) g = mp::gcd(g, m);
    if (g != 1) throw Error(ErrorKind::InvalidArgument, "beta " + to_string(beta) + " is not surjective onto Z^d");
  }
  return assemble(iota, beta, std::move(name));
}

ToricDatum gale_dual(const ToricDatum& x) {
  const IntMatrix iota_dual = x.beta.transpose();
  const IntMatrix beta_dual = x.iota.transpose();
  std::string name = x.name.empty() ? std::string() : x.name + "^!";
  return validate(iota_dual, beta_dual, std::move(name));
}

FixedPoint FixedPoint::from_one_based(std::vector<int> one_based) {
  FixedPoint p;
  for (int i : one_based) {
    if (i < 1) throw Error(ErrorKind::InvalidArgument, "fixed point indices are 1-based");
    p.indices.push_back(i - 1);
  }
  std::sort(p.indices.begin(), p.indices.end());
  if (std::adjacent_find(p.indices.begin(), p.indices.end()) != p.indices.end())
    throw Error(ErrorKind::InvalidArgument, "repeated index in fixed point");
  return p;
}

std::vector<int> FixedPoint::one_based() const {
  std::vector<int> out = indices;
  for (int& i : out) ++i;
  return out;
}

bool FixedPoint::contains(int i) const { return std::binary_search(indices.begin(), indices.end(), i); }

std::vector<int> FixedPoint::complement(int n) const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!contains(i)) out.push_back(i);
  return out;
}

std::string FixedPoint::str() const { return subset_str(indices); }

std::vector<FixedPoint> fixed_points(const ToricDatum& x) {
  std::vector<FixedPoint> out;
  for (auto& s : combinations(x.n, x.k))
    if (determinant(select_rows(x.iota, s)) != 0) out.push_back({std::move(s)});
  return out;
}

bool is_fixed_point(const ToricDatum& x, const FixedPoint& p) {
  if (static_cast<int>(p.indices.size()) != x.k) return false;
  for (int i : p.indices)
    if (i < 0 || i >= x.n) return false;
  return determinant(chart(x, p)) != 0;
}

FixedPoint mirror_fixed_point(const FixedPoint& p, int n) { return {p.complement(n)}; }

IntMatrix chart(const ToricDatum& x, const FixedPoint& p) { return select_rows(x.iota, p.indices); }

RationalCone kahler_cone(const ToricDatum& x, const FixedPoint& p) {
  RationalCone c{{}, true, x.k};
  for (int i : p.indices) c.generators.push_back(rat_row(x.iota, i));
  return c;
}

RationalCone attracting_cone(const ToricDatum& x, const FixedPoint& p) {
  RationalCone c{{}, true, x.d};
  for (int i : p.complement(x.n)) c.generators.push_back(rat_col(x.beta, i));
  return c;
}

RationalCone effective_cone(const ToricDatum& x, const FixedPoint& p) {
  const IntMatrix inv = invert_unimodular(chart(x, p));
  RationalCone c{{}, false, x.k};
  for (Index j = 0; j < inv.cols(); ++j) c.generators.push_back(rat_col(inv, j));
  return c;
}

bool in_effective_cone(const ToricDatum& x, const FixedPoint& p, const RatVector& deg) {
  if (deg.size() != x.k) throw Error(ErrorKind::DimensionMismatch, "degree vector length");
  for (int i : p.indices) {
    Rational s = 0;
    for (int a = 0; a < x.k; ++a) s += Rational(x.iota(i, a)) * deg(a);
    if (s < 0) return false;
  }
  return true;
}

bool cone_contains(const RationalCone& c, const RatVector& v, bool strict) {
  if (v.size() != c.dim) throw Error(ErrorKind::DimensionMismatch, "vector and cone live in different dimensions");
  const Index r = static_cast<Index>(c.generators.size());
  RatMatrix g(c.dim, r);
  for (Index j = 0; j < r; ++j) {
    if (c.generators[j].size() != c.dim) throw Error(ErrorKind::DimensionMismatch, "cone generator dimension");
    g.col(j) = c.generators[j];
  }
  const bool full = rank(g) == c.dim;
  if (r == 0) return v.isZero() && (!strict || c.dim == 0);
  if (r == c.dim && full) {
    const RatVector lambda = solve(g, v);
    for (Index j = 0; j < r; ++j)
      if (lambda(j) < 0 || (strict && lambda(j) == 0)) return false;
    return true;
  }
  // maximize t subject to v = sum (s_j + t) g_j, s >= 0, t <= 1, with t = t+ - t-.
  const Index vars = r + 3;
  RatMatrix a = RatMatrix::Zero(c.dim + 1, vars);
  RatVector b(c.dim + 1), obj = RatVector::Zero(vars);
  RatVector gsum = RatVector::Zero(c.dim);
  for (Index j = 0; j < r; ++j) gsum += g.col(j);
  a.topLeftCorner(c.dim, r) = g;
  a.block(0, r, c.dim, 1) = gsum;
  a.block(0, r + 1, c.dim, 1) = -gsum;
  b.head(c.dim) = v;
  a(c.dim, r) = 1;
  a(c.dim, r + 1) = -1;
  a(c.dim, r + 2) = 1;
  b(c.dim) = 1;
  obj(r) = 1;
  obj(r + 1) = -1;
  const LpResult res = maximize(a, b, obj);
  if (res.status != LpResult::Status::Optimal) return false;
  if (strict) return full && res.value > 0;
  return res.value >= 0;
}

bool same_cone(const RationalCone& c1, const RationalCone& c2) {
  if (c1.dim != c2.dim) return false;
  for (const auto& g : c1.generators)
    if (!cone_contains(RationalCone{c2.generators, false, c2.dim}, g, false)) return false;
  for (const auto& g : c2.generators)
    if (!cone_contains(RationalCone{c1.generators, false, c1.dim}, g, false)) return false;
  return true;
}

bool on_wall(const ToricDatum& x, const RatVector& theta) {
  if (theta.size() != x.k) throw Error(ErrorKind::DimensionMismatch, "stability vector length");
  for (const auto& p : fixed_points(x)) {
    const RatVector c = chart_coordinates(x, p, theta);
    bool any_zero = false, all_nonneg = true;
    for (Index j = 0; j < c.size(); ++j) {
      if (c(j) == 0) any_zero = true;
      if (c(j) < 0) all_nonneg = false;
    }
    if (any_zero && all_nonneg) return true;
  }
  return false;
}

std::vector<FixedPoint> quotient_fixed_points(const ToricDatum& x, const RatVector& theta) {
  if (on_wall(x, theta)) {
    std::ostringstream os;
    os << "stability vector (";
    for (Index j = 0; j < theta.size(); ++j) os << (j ? "," : "") << to_string(theta(j));
    os << ") lies on a wall";
    throw Error(ErrorKind::OnWall, os.str());
  }
  std::vector<FixedPoint> out;
  for (const auto& p : fixed_points(x)) {
    const RatVector c = chart_coordinates(x, p, theta);
    bool inside = true;
    for (Index j = 0; j < c.size(); ++j) inside = inside && c(j) > 0;
    if (inside) out.push_back(p);
  }
  return out;
}

namespace {

struct Ray {
  Integer x, y;
};

int half_plane(const Ray& r) { return (r.y > 0 || (r.y == 0 && r.x > 0)) ? 0 : 1; }

Integer cross(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

bool angle_less(const Ray& a, const Ray& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

RatVector to_vec(const Integer& x, const Integer& y) {
  RatVector v(2);
  v(0) = Rational(x);
  v(1) = Rational(y);
  return v;
}

}  // namespace

std::vector<Chamber> chambers(const ToricDatum& x) {
  if (x.k > 2) throw Error(ErrorKind::Unsupported, "chamber enumeration needs k <= 2; query stability vectors instead");
  std::vector<Chamber> out;
  if (x.k == 1) {
    for (int sign : {1, -1}) {
      RatVector theta(1);
      theta(0) = sign;
      auto pts = quotient_fixed_points(x, theta);
      if (pts.empty()) continue;
      out.push_back({RationalCone{{theta}, true, 1}, theta, std::move(pts)});
    }
    return out;
  }
  std::vector<Ray> rays;
  for (const auto& p : fixed_points(x))
    for (int i : p.indices) {
      Integer a = x.iota(i, 0), b = x.iota(i, 1);
      const Integer g = mp::gcd(abs(a), abs(b));
      if (g == 0) continue;
      rays.push_back({a / g, b / g});
    }
  std::sort(rays.begin(), rays.end(), angle_less);
  rays.erase(std::unique(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.x == b.x && a.y == b.y; }),
             rays.end());
  if (rays.empty()) return out;
  for (size_t i = 0; i < rays.size(); ++i) {
    const Ray& r1 = rays[i];
    const Ray& r2 = rays[(i + 1) % rays.size()];
    RatVector sample;
    bool convex = false;
    if (rays.size() == 1) {
      sample = to_vec(-r1.x, -r1.y);
    } else if (cross(r1, r2) > 0) {
      sample = to_vec(r1.x + r2.x, r1.y + r2.y);
      convex = true;
    } else if (cross(r1, r2) == 0) {
      sample = to_vec(-r1.y, r1.x);
    } else {
      sample = to_vec(-(r1.x + r2.x), -(r1.y + r2.y));
    }
    auto pts = quotient_fixed_points(x, sample);
    if (pts.empty()) continue;
    if (!convex) throw Error(ErrorKind::Unsupported, "nonempty chamber spanning a half-plane or more");
    out.push_back({RationalCone{{to_vec(r1.x, r1.y), to_vec(r2.x, r2.y)}, true, 2}, sample, std::move(pts)});
  }
  return out;
}

RatVector lift_cocharacter(const ToricDatum& x, const FixedPoint& p, const RatVector& sigma) {
  if (sigma.size() != x.d) throw Error(ErrorKind::DimensionMismatch, "cocharacter length");
  const std::vector<int> out_idx = p.complement(x.n);
  const RatVector part = solve(to_rational(select_cols(x.beta, out_idx)), sigma);
  RatVector lift = RatVector::Zero(x.n);
  for (size_t r = 0; r < out_idx.size(); ++r) {
    if (part(r) == 0)
      throw Error(ErrorKind::NonGeneric, "cocharacter lift vanishes at index " + std::to_string(out_idx[r] + 1) +
                                             " for fixed point " + p.str());
    lift(out_idx[r]) = part(r);
  }
  return lift;
}

bool is_minimal(const ToricDatum& x, const FixedPoint& p, const RatVector& sigma) {
  const RatVector lift = lift_cocharacter(x, p, sigma);
  for (int i : p.complement(x.n))
    if (lift(i) <= 0) return false;
  return true;
}

RestrictionTable u_restriction(const ToricDatum& x, const FixedPoint& p) {
  RestrictionTable t;
  t.point = p;
  t.outside = p.complement(x.n);
  const IntMatrix pinv = invert_unimodular(chart(x, p));
  t.c = select_rows(x.iota, t.outside) * pinv;
  for (size_t r = 0; r < t.outside.size(); ++r) {
    std::vector<int> e(x.n, 0);
    e[t.outside[r]] = 1;
    for (size_t j = 0; j < p.indices.size(); ++j) e[p.indices[j]] = -to_int(t.c(static_cast<Index>(r), static_cast<Index>(j)));
    t.exponents.push_back(std::move(e));
  }
  return t;
}

std::vector<Rational> effective_levels(const ToricDatum& x) {
  std::vector<Rational> out;
  for (int j = 0; j < x.n; ++j) {
    Integer s = 0;
    for (int a = 0; a < x.k; ++a) s += x.iota(j, a);
    out.push_back(Rational(s * s) / 2);
  }
  return out;
}

}  // namespace qmirror
