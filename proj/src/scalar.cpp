#include "qmirror/scalar.hpp"

#include <limits>
#include <sstream>

#include "qmirror/error.hpp"

namespace qmirror {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotTotallyUnimodular: return "NotTotallyUnimodular";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OnWall: return "OnWall";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NonGeneric: return "NonGeneric";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtTruncation: return "PoleAtTruncation";
    case ErrorKind::NonPositiveGrading: return "NonPositiveGrading";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::OutOfTruncationRange: return "OutOfTruncationRange";
    case ErrorKind::NonGenericSpecialization: return "NonGenericSpecialization";
    case ErrorKind::TruncationUnderflow: return "TruncationUnderflow";
    case ErrorKind::TruncationMismatch: return "TruncationMismatch";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

IntMatrix make_int_matrix(const std::vector<std::vector<long>>& rows, Index cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<Index>(rows.front().size());
  IntMatrix m(static_cast<Index>(rows.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) {
    if (static_cast<Index>(rows[i].size()) != cols)
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (Index j = 0; j < cols; ++j) m(i, j) = Integer(rows[i][j]);
  }
  return m;
}

RatVector make_rat_vector(const std::vector<Rational>& entries) {
  RatVector v(static_cast<Index>(entries.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = entries[i];
  return v;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (mp::denominator(m(i, j)) != 1)
        throw Error(ErrorKind::InvalidArgument, "non-integral entry " + to_string(m(i, j)));
      out(i, j) = mp::numerator(m(i, j));
    }
  return out;
}

int to_int(const Integer& v) {
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
    throw Error(ErrorKind::InvalidArgument, "integer " + v.str() + " does not fit an exponent");
  return v.convert_to<int>();
}

int to_int(const Rational& v) {
  if (mp::denominator(v) != 1)
    throw Error(ErrorKind::InvalidArgument, "non-integral value " + to_string(v));
  return to_int(Integer(mp::numerator(v)));
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (mp::denominator(v) == 1) return mp::numerator(v).str();
  return mp::numerator(v).str() + "/" + mp::denominator(v).str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
  }
  os << "]";
  return os.str();
}

}  // namespace qmirror
