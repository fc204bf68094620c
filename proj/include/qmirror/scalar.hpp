#pragma once

// Exact scalar and dense matrix types shared by every module.

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <vector>

namespace qmirror {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

using Index = Eigen::Index;

/// Builds an integer matrix from nested rows; all rows must have equal length.
IntMatrix make_int_matrix(const std::vector<std::vector<long>>& rows, Index cols = -1);
RatVector make_rat_vector(const std::vector<Rational>& entries);

template <typename Scalar>
Matrix<Rational> to_rational(const Matrix<Scalar>& m) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Converts a rational matrix with integral entries back to integers; throws otherwise.
IntMatrix to_integer(const RatMatrix& m);

/// Narrowing conversion for small exponents; throws on overflow.
int to_int(const Integer& v);
int to_int(const Rational& v);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
std::string to_string(const IntMatrix& m);

}  // namespace qmirror
