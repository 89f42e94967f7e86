#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace cmpair {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched matrix sizes between the members of a pair.
struct DimensionError : Error {
  using Error::Error;
};

/// Numerically singular conjugating matrix.
struct SingularError : Error {
  using Error::Error;
};

/// Input outside the open domain an operation is defined on
/// (non-real spectra, coincident particles, rank conditions, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A point (A,B) of the matrix-pair phase space: two real n x n matrices.
struct PhasePoint {
  Matrix A;
  Matrix B;

  PhasePoint(Matrix a, Matrix b) : A(std::move(a)), B(std::move(b)) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
      throw DimensionError("PhasePoint: A and B must be square with equal size");
    if (!A.allFinite() || !B.allFinite())
      throw DomainError("PhasePoint: entries must be finite");
  }

  int n() const { return static_cast<int>(A.rows()); }
};

/// Cotangent vector (xi, eta) under the trace pairing.
struct CovectorPair {
  Matrix xi;
  Matrix eta;
};

/// Tangent vector (V, W).
struct TangentPair {
  Matrix V;
  Matrix W;
};

inline TangentPair operator+(const TangentPair& a, const TangentPair& b) {
  return {a.V + b.V, a.W + b.W};
}
inline TangentPair operator-(const TangentPair& a, const TangentPair& b) {
  return {a.V - b.V, a.W - b.W};
}
inline TangentPair operator*(double c, const TangentPair& t) {
  return {c * t.V, c * t.W};
}
inline CovectorPair operator+(const CovectorPair& a, const CovectorPair& b) {
  return {a.xi + b.xi, a.eta + b.eta};
}
inline CovectorPair operator*(double c, const CovectorPair& a) {
  return {c * a.xi, c * a.eta};
}

inline double trace_product(const Matrix& x, const Matrix& y) {
  return x.cwiseProduct(y.transpose()).sum();  // tr(x y)
}

/// Trace pairing <(xi,eta),(V,W)> = tr(xi V) + tr(eta W).
inline double pairing(const CovectorPair& c, const TangentPair& t) {
  if (c.xi.rows() != t.V.rows() || c.eta.rows() != t.W.rows() ||
      c.xi.cols() != t.V.cols() || c.eta.cols() != t.W.cols())
    throw DimensionError("pairing: covector/tangent dimensions differ");
  return trace_product(c.xi, t.V) + trace_product(c.eta, t.W);
}

/// A^k for k >= 0, by left-to-right multiplication (A^k = A^{k-1} * A).
inline Matrix mat_pow(const Matrix& a, int k) {
  if (k < 0) throw DomainError("mat_pow: negative exponent");
  Matrix r = Matrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double phase_norm(const PhasePoint& p) {
  return std::sqrt(p.A.squaredNorm() + p.B.squaredNorm());
}

/// Simultaneous conjugation (A,B) -> (g A g^-1, g B g^-1).
PhasePoint conjugate(const Matrix& g, const PhasePoint& p);

/// Ratio of extreme singular values; infinity when singular.
double condition_number(const Matrix& g);

}  // namespace cmpair
