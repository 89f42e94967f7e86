#include "cmpair/types.hpp"

#include <Eigen/SVD>
#include <limits>

namespace cmpair {

double condition_number(const Matrix& g) {
  Eigen::JacobiSVD<Matrix> svd(g);
  const auto& sv = svd.singularValues();
  const double smin = sv[sv.size() - 1];
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return sv[0] / smin;
}

PhasePoint conjugate(const Matrix& g, const PhasePoint& p) {
  if (g.rows() != p.n() || g.cols() != p.n())
    throw DimensionError("conjugate: g size differs from phase point");
  if (!(condition_number(g) < 1e12))
    throw SingularError("conjugate: g is numerically singular");
  const Matrix gi = g.inverse();
  return PhasePoint(g * p.A * gi, g * p.B * gi);
}

}  // namespace cmpair
