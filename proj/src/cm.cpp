#include "cmpair/cm.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cmpair/membership.hpp"

namespace cmpair {

namespace {

void check_ordered(const std::vector<double>& x) {
  for (size_t i = 0; i + 1 < x.size(); ++i)
    if (!(x[i] < x[i + 1])) throw DomainError("CMState: positions must be strictly increasing");
}

Matrix lax_from_raw(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  Matrix l(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        l(i, i) = y[i];
      } else {
        const double dx = x[i] - x[j];
        if (dx == 0.0) throw DomainError("lax_matrix: coincident positions");
        l(i, j) = 1.0 / dx;
      }
    }
  }
  return l;
}

}  // namespace

CMState::CMState(std::vector<double> x_, std::vector<double> y_)
    : x(std::move(x_)), y(std::move(y_)) {
  if (x.empty() || x.size() != y.size())
    throw DimensionError("CMState: x and y must be nonempty and equally sized");
  for (double v : x)
    if (!std::isfinite(v)) throw DomainError("CMState: non-finite position");
  for (double v : y)
    if (!std::isfinite(v)) throw DomainError("CMState: non-finite momentum");
  check_ordered(x);
  if (n() == 2 && !(std::abs(y[0] - y[1]) * (x[1] - x[0]) > 2.0))
    throw DomainError("CMState: outside the attractive domain |y1-y2|(x2-x1) > 2");
}

InvariantVector invariants_map(const PhasePoint& p) {
  const int n = p.n();
  InvariantVector v;
  v.I.resize(n);
  v.J.resize(n);
  Matrix pw = Matrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    v.J[k - 1] = (pw * p.B).trace();  // tr(A^{k-1} B)
    pw = pw * p.A;
    v.I[k - 1] = pw.trace() / k;
  }
  return v;
}

Matrix mu_matrix(int n) {
  Matrix m = Matrix::Ones(n, n);
  m.diagonal().setZero();
  return m;
}

Matrix lax_matrix(const CMState& c) { return lax_from_raw(c.x, c.y); }

PhasePoint embed_Q(const CMState& c) {
  const int n = c.n();
  Matrix b = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) b(i, i) = c.x[i];
  return PhasePoint(lax_matrix(c), b);
}

bool rank1_check(const PhasePoint& p, double tol) {
  const Matrix k = commutator(p.B, p.A) + Matrix::Identity(p.n(), p.n());
  Eigen::JacobiSVD<Matrix> svd(k);
  const auto& sv = svd.singularValues();
  if (sv[0] == 0.0) return false;
  if (sv.size() < 2) return true;
  return sv[1] < tol * sv[0];
}

CMState normalize_to_Q(const PhasePoint& p, double tol) {
  const int n = p.n();
  if (!rank1_check(p, tol)) throw DomainError("normalize_to_Q: rank-1 condition fails");
  const MembershipReport rep = in_open_set_M(p, tol);
  if (!rep.in_M) throw DomainError("normalize_to_Q: point outside the open set");

  auto eig = real_eigen_decomposition(p.B, tol);
  if (!eig) throw DomainError("normalize_to_Q: B eigenbasis extraction failed");
  const Matrix vinv = eig->vectors.inverse();
  const Matrix a1 = vinv * p.A * eig->vectors;
  const Vector x = eig->values;

  // K = [diag(x), A'] + I has unit diagonal by construction; a rank-one K
  // with K_ij = a_i / a_j is flattened to all-ones by conjugation with
  // diag(1/a).
  Matrix k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k(i, j) = (i == j) ? 1.0 : (x[i] - x[j]) * a1(i, j);

  const Matrix b1 = vinv * p.B * eig->vectors;
  double offb = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offb = std::max(offb, std::abs(b1(i, j)));
  if (offb > 1e3 * tol * (1.0 + x.cwiseAbs().maxCoeff()))
    throw DomainError("normalize_to_Q: B eigenbasis residual too large");

  Vector a(n);
  a[0] = 1.0;
  for (int i = 1; i < n; ++i) a[i] = k(i, 0);
  Matrix a2(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a2(i, j) = a1(i, j) * a[j] / a[i];

  // Consistency: the flattened pair must embed back onto itself.
  double resid = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) resid = std::max(resid, std::abs((x[i] - x[j]) * a2(i, j) - 1.0));
  if (resid > 1e-6) throw DomainError("normalize_to_Q: inconsistent rank-1 data");

  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = x[i];
    ys[i] = a2(i, i);
  }
  return CMState(std::move(xs), std::move(ys));
}

Matrix xi_closed_form(const CMState& c, int k) {
  if (k < 1) throw DomainError("xi_closed_form: k must be >= 1");
  const int n = c.n();
  const Matrix pw = mat_pow(lax_matrix(c), k - 1);
  Matrix xi = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) xi(i, j) = pw(i, j) / (c.x[i] - c.x[j]);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int l = 0; l < n; ++l)
      if (l != i) s += xi(i, l) + xi(l, i);
    xi(i, i) = -0.5 * s;
  }
  return xi;
}

CMFlow cm_flow(const CMState& c, int k) {
  if (k < 1) throw DomainError("cm_flow: k must be >= 1");
  const int n = c.n();
  const Matrix l = lax_matrix(c);
  const Matrix pw = mat_pow(l, k - 1);
  const Matrix xi = xi_closed_form(c, k);
  const Matrix com = commutator(xi, l);
  CMFlow f;
  f.xdot.resize(n);
  f.ydot.resize(n);
  for (int i = 0; i < n; ++i) {
    f.xdot[i] = pw(i, i);
    f.ydot[i] = com(i, i);
  }
  return f;
}

QPrimeData pi_inverse(const InvariantVector& v, double tol) {
  const int n = static_cast<int>(v.I.size());
  if (n < 1 || static_cast<int>(v.J.size()) != n)
    throw DimensionError("pi_inverse: invariant vector malformed");

  // Power sums -> elementary symmetric functions -> monic characteristic
  // polynomial lambda^n + c_{n-1} lambda^{n-1} + ... + c_0.
  std::vector<double> p(n + 1, 0.0), e(n + 1, 0.0);
  p[0] = n;
  for (int i = 1; i <= n; ++i) p[i] = i * v.I[i - 1];
  e[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    double acc = 0.0;
    for (int j = 1; j <= i; ++j) acc += (j % 2 == 1 ? 1.0 : -1.0) * e[i - j] * p[j];
    e[i] = acc / i;
  }
  std::vector<double> coef(n);  // coef[j] multiplies lambda^j
  for (int i = 1; i <= n; ++i) coef[n - i] = (i % 2 == 1 ? -1.0 : 1.0) * e[i];

  Matrix companion = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) companion(i + 1, i) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coef[i];

  Eigen::EigenSolver<Matrix> es(companion);
  const Eigen::VectorXcd roots = es.eigenvalues();
  double rmax = 0.0;
  for (int i = 0; i < n; ++i) rmax = std::max(rmax, std::abs(roots[i]));
  std::vector<double> lambda(n);
  for (int i = 0; i < n; ++i) {
    if (std::abs(roots[i].imag()) > tol * (1.0 + std::abs(roots[i])))
      throw DomainError("pi_inverse: complex-roots");
    lambda[i] = roots[i].real();
  }
  std::sort(lambda.begin(), lambda.end());
  for (int i = 0; i + 1 < n; ++i)
    if (!(lambda[i + 1] - lambda[i] > tol * (1.0 + rmax)))
      throw DomainError("pi_inverse: coincident-roots");

  Matrix vdm(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) vdm(k, l) = std::pow(lambda[l], k);
  Eigen::JacobiSVD<Matrix> svd(vdm, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (!(sv[n - 1] > 1e-13 * sv[0]))
    throw DomainError("pi_inverse: ill-conditioned-vandermonde");
  Vector j(n);
  for (int k = 0; k < n; ++k) j[k] = v.J[k];
  const Vector mu = svd.solve(j);

  QPrimeData out;
  out.lambda = lambda;
  out.mu.assign(mu.data(), mu.data() + n);
  return out;
}

InvariantVector qprime_invariants(const QPrimeData& q) {
  const int n = static_cast<int>(q.lambda.size());
  if (n < 1 || q.mu.size() != q.lambda.size())
    throw DimensionError("qprime_invariants: malformed data");
  InvariantVector v;
  v.I.resize(n);
  v.J.resize(n);
  for (int k = 1; k <= n; ++k) {
    double si = 0.0, sj = 0.0;
    for (int l = 0; l < n; ++l) {
      si += std::pow(q.lambda[l], k);
      sj += q.mu[l] * std::pow(q.lambda[l], k - 1);
    }
    v.I[k - 1] = si / k;
    v.J[k - 1] = sj;
  }
  return v;
}

PhasePoint embed_QPrime(const QPrimeData& q) {
  const int n = static_cast<int>(q.lambda.size());
  Matrix d = Matrix::Zero(n, n);
  Matrix l(n, n);
  for (int i = 0; i < n; ++i) {
    d(i, i) = q.lambda[i];
    l(i, i) = q.mu[i];
    for (int j = 0; j < n; ++j)
      if (i != j) l(i, j) = 1.0 / (q.lambda[j] - q.lambda[i]);
  }
  return PhasePoint(d, l);
}

double n2_delta(const CMState& c) {
  if (c.n() != 2) throw DomainError("n2_delta: n must be 2");
  const double x12 = 1.0 / (c.x[0] - c.x[1]);
  const double dy = c.y[0] - c.y[1];
  return 4.0 * x12 * x12 - dy * dy;
}

double n2_bracket1_xy(const CMState& c, N2Coord f, N2Coord g) {
  if (c.n() != 2) throw DomainError("n2_bracket1_xy: n must be 2");
  if (f == g) return 0.0;
  const double x12 = 1.0 / (c.x[0] - c.x[1]);
  const double dy = c.y[0] - c.y[1];
  const double delta = 4.0 * x12 * x12 - dy * dy;
  if (std::abs(delta) < 1e-10 * (1.0 + 4.0 * x12 * x12 + dy * dy))
    throw DomainError("n2_bracket1_xy: singular locus delta = 0");
  const double q = dy * x12 * x12 / delta;

  auto entry = [&](N2Coord a, N2Coord b) -> double {
    using C = N2Coord;
    if (a == C::x1 && b == C::x2) return 2.0 * x12 / delta;
    if (a == C::x1 && b == C::y1) return c.y[0] + q;
    if (a == C::x2 && b == C::y2) return c.y[1] - q;
    if (a == C::x2 && b == C::y1) return q;
    if (a == C::x1 && b == C::y2) return -q;  // {y2, x1} = +q
    if (a == C::y1 && b == C::y2) return -x12 * x12 * x12;
    return std::numeric_limits<double>::quiet_NaN();
  };
  const double direct = entry(f, g);
  if (!std::isnan(direct)) return direct;
  return -entry(g, f);
}

Eigen::Matrix4d n2_invariant_jacobian(const CMState& c) {
  if (c.n() != 2) throw DomainError("n2_invariant_jacobian: n must be 2");
  const double x12 = 1.0 / (c.x[0] - c.x[1]);
  const double x12c = x12 * x12 * x12;
  Eigen::Matrix4d j;
  // rows: I1, I2, J1, J2; columns: x1, x2, y1, y2
  j << 0.0, 0.0, 1.0, 1.0,                          // I1 = y1 + y2
      2.0 * x12c, -2.0 * x12c, c.y[0], c.y[1],      // I2 = (y1^2+y2^2)/2 - x12^2
      1.0, 1.0, 0.0, 0.0,                           // J1 = x1 + x2
      c.y[0], c.y[1], c.x[0], c.x[1];               // J2 = x1 y1 + x2 y2
  return j;
}

PhasePoint duality_swap(const PhasePoint& p) { return PhasePoint(-p.B, p.A); }

TraceExpr compose_with_duality_swap(const TraceExpr& f) {
  TraceExpr out;
  for (const auto& [w, c] : f.terms()) {
    std::string swapped;
    swapped.reserve(w.size());
    int a_count = 0;
    for (char ch : w) {
      if (ch == 'A') {
        ++a_count;
        swapped.push_back('B');
      } else {
        swapped.push_back('A');
      }
    }
    out.add_term(swapped, (a_count % 2 == 0 ? 1.0 : -1.0) * c);
  }
  return out;
}

TangentPair p0_dual_apply(const CovectorPair& c) { return p0_apply(c); }

TangentPair p1_dual_apply(const PhasePoint& p, const CovectorPair& c) {
  return {c.eta * p.B - commutator(p.A, c.xi), -p.B * c.xi};
}

double bracket_numeric_dual(const PencilSelector& s, const TraceExpr& f, const TraceExpr& g,
                            const PhasePoint& p) {
  const CovectorPair df = f.grad(p), dg = g.grad(p);
  TangentPair field{Matrix::Zero(p.n(), p.n()), Matrix::Zero(p.n(), p.n())};
  switch (s.tag) {
    case PencilSelector::Tag::P0: field = p0_dual_apply(df); break;
    case PencilSelector::Tag::P1: field = p1_dual_apply(p, df); break;
    case PencilSelector::Tag::Pencil:
      field = p0_dual_apply(df) + s.t * p1_dual_apply(p, df);
      break;
  }
  return pairing(dg, field);
}

}  // namespace cmpair
