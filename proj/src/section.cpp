#include "cmpair/section.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace cmpair {

namespace {

bool exactly_diagonal(const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0.0) return false;
  return true;
}

}  // namespace

SectionPoint make_section_point(const PhasePoint& p, double tol) {
  const int n = p.n();
  const double scale_b = 1.0 + max_abs(p.B);
  const double scale_a = 1.0 + max_abs(p.A);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && std::abs(p.B(i, j)) > tol * scale_b)
        throw DomainError("section point: B must be diagonal");
  for (int i = 0; i + 1 < n; ++i)
    if (!(p.B(i, i) < p.B(i + 1, i + 1)))
      throw DomainError("section point: diagonal of B must be strictly increasing");

  SignPattern pat;
  pat.eps.resize(n > 0 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) {
    const double lower = p.A(i + 1, i), upper = p.A(i, i + 1);
    if (!(lower > 0.0)) throw DomainError("section point: A subdiagonal must be positive");
    const int eps = upper >= 0.0 ? 1 : -1;
    if (std::abs(upper - eps * lower) > tol * scale_a)
      throw DomainError("section point: |A_{i,i+1}| must equal A_{i+1,i}");
    pat.eps[i] = eps;
  }
  return SectionPoint{p, pat};
}

CanonicalFormResult canonical_form(const PhasePoint& p, double tol) {
  const int n = p.n();
  const MembershipReport rep = in_open_set_M(p, tol);
  if (!rep.in_M) {
    std::ostringstream os;
    os << "canonical_form: point outside the open set:";
    for (auto c : rep.reasons) os << " " << to_string(c);
    throw DomainError(os.str());
  }

  // Step 1: eigenbasis of B, ascending. A diagonal B short-circuits to a
  // permutation so that exact section points return g = I exactly.
  Matrix basis_inv;
  Vector lambda(n);
  if (exactly_diagonal(p.B)) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.B(a, a) < p.B(b, b); });
    bool identity = true;
    for (int i = 0; i < n; ++i) identity = identity && order[i] == i;
    if (identity) {
      basis_inv = Matrix::Identity(n, n);
      lambda = p.B.diagonal();
    } else {
      Matrix perm = Matrix::Zero(n, n);
      for (int j = 0; j < n; ++j) perm(order[j], j) = 1.0;
      basis_inv = perm.transpose();
      for (int j = 0; j < n; ++j) lambda[j] = p.B(order[j], order[j]);
    }
  } else {
    auto eig = real_eigen_decomposition(p.B, tol);
    if (!eig) throw DomainError("canonical_form: B eigenbasis extraction failed");
    basis_inv = eig->vectors.inverse();
    lambda = eig->values;
  }
  const Matrix a1 = basis_inv * p.A * basis_inv.inverse();

  // Step 2: determine the signs and the diagonal rescaling, d_n = 1.
  Vector d(n);
  d[n - 1] = 1.0;
  SignPattern pat;
  pat.eps.resize(n - 1);
  for (int i = n - 2; i >= 0; --i) {
    const double lower = a1(i + 1, i), upper = a1(i, i + 1);
    pat.eps[i] = (upper / lower) > 0.0 ? 1 : -1;
    const double ratio = std::sqrt(pat.eps[i] * lower / upper);
    d[i] = (lower > 0.0 ? 1.0 : -1.0) * ratio * d[i + 1];
  }

  Matrix a2(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a2(i, j) = d[i] * a1(i, j) / d[j];
  Matrix b2 = lambda.asDiagonal();
  Matrix g = d.asDiagonal() * basis_inv;

  return CanonicalFormResult{make_section_point(PhasePoint(a2, b2), 1e-6), g};
}

namespace detail {

RawDecomposition tangent_decompose_raw(const Matrix& a, const Vector& b_diag,
                                       const std::vector<int>& eps, const Matrix& v,
                                       const Matrix& w) {
  const int n = static_cast<int>(a.rows());
  const double bscale = 1.0 + b_diag.cwiseAbs().maxCoeff();

  // Off-diagonal part of xi from the fiber component.
  Matrix xi = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double gap = b_diag[i] - b_diag[j];
      if (std::abs(gap) < 1e-14 * bscale)
        throw DomainError("tangent_decompose: vanishing eigenvalue gap");
      xi(i, j) = w(i, j) / gap;
    }
  }

  // Diagonal of xi from the n-1 sign constraints on consecutive differences,
  // closed with tr xi = 0.
  const Matrix com = commutator(a, xi);  // diagonal of xi not yet included
  Vector d = Vector::Zero(n);
  for (int i = n - 2; i >= 0; --i) {
    const double denom = 2.0 * eps[i] * a(i + 1, i);
    if (denom == 0.0) throw DomainError("tangent_decompose: vanishing subdiagonal entry");
    const double rhs = eps[i] * (v(i + 1, i) - com(i + 1, i)) - (v(i, i + 1) - com(i, i + 1));
    d[i] = d[i + 1] + rhs / denom;
  }
  d.array() -= d.mean();
  xi += Matrix(d.asDiagonal());

  RawDecomposition out;
  out.xi = xi;
  out.a_dot = v - commutator(a, xi);
  out.b_dot = w.diagonal();  // [diag(b), xi] has exactly zero diagonal
  return out;
}

}  // namespace detail

Decomposition tangent_decompose(const SectionPoint& sp, const TangentPair& t) {
  const PhasePoint& p = sp.point;
  if (t.V.rows() != p.n() || t.W.rows() != p.n())
    throw DimensionError("tangent_decompose: dimension mismatch");
  auto raw = detail::tangent_decompose_raw(p.A, p.B.diagonal(), sp.pattern.eps, t.V, t.W);
  const Matrix orbit_v = commutator(p.A, raw.xi);
  const Matrix orbit_w = commutator(p.B, raw.xi);
  return Decomposition{{t.V - orbit_v, t.W - orbit_w}, raw.xi};
}

TangentPair projected_flow(const SectionPoint& sp, int k) {
  if (k < 1) throw DomainError("projected_flow: k must be >= 1");
  const int n = sp.point.n();
  TangentPair field{Matrix::Zero(n, n), mat_pow(sp.point.A, k - 1)};
  return tangent_decompose(sp, field).section_tangent;
}

}  // namespace cmpair
