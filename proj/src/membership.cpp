#include "cmpair/membership.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cmpair {

namespace {

double spectral_radius(const Eigen::VectorXcd& ev) {
  double r = 0.0;
  for (int i = 0; i < ev.size(); ++i) r = std::max(r, std::abs(ev[i]));
  return r;
}

// Smallest pairwise eigenvalue distance, relative to 1 + spectral radius.
double relative_gap(const Eigen::VectorXcd& ev) {
  const int n = static_cast<int>(ev.size());
  if (n < 2) return std::numeric_limits<double>::infinity();
  double g = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g = std::min(g, std::abs(ev[i] - ev[j]));
  return g / (1.0 + spectral_radius(ev));
}

}  // namespace

std::optional<RealEigen> real_eigen_decomposition(const Matrix& m, double tol) {
  const int n = static_cast<int>(m.rows());
  Eigen::EigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) return std::nullopt;
  const Eigen::VectorXcd ev = es.eigenvalues();
  const double scale = 1.0 + spectral_radius(ev);
  for (int i = 0; i < n; ++i)
    if (std::abs(ev[i].imag()) > tol * scale) return std::nullopt;

  Eigen::MatrixXcd vc = es.eigenvectors();
  Matrix vr(n, n);
  for (int j = 0; j < n; ++j) {
    // Rotate the complex phase away, then fix the sign deterministically.
    int arg = 0;
    vc.col(j).cwiseAbs().maxCoeff(&arg);
    const std::complex<double> ph = vc(arg, j) / std::abs(vc(arg, j));
    Eigen::VectorXcd col = vc.col(j) / ph;
    if (col.imag().cwiseAbs().maxCoeff() > 1e3 * tol * (1.0 + col.cwiseAbs().maxCoeff()))
      return std::nullopt;
    Vector real_col = col.real();
    real_col.normalize();
    for (int i = 0; i < n; ++i) {
      if (std::abs(real_col[i]) > 1e-12) {
        if (real_col[i] < 0) real_col = -real_col;
        break;
      }
    }
    vr.col(j) = real_col;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return ev[a].real() < ev[b].real(); });
  RealEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = ev[order[j]].real();
    out.vectors.col(j) = vr.col(order[j]);
  }
  return out;
}

std::string to_string(MembershipCode c) {
  switch (c) {
    case MembershipCode::EigenvaluesNotReal: return "eigenvalues-not-real";
    case MembershipCode::EigenvaluesNotDistinct: return "eigenvalues-not-distinct";
    case MembershipCode::ZeroCouplingEntryAB: return "zero-coupling-entry-AB";
    case MembershipCode::ZeroCouplingEntryBA: return "zero-coupling-entry-BA";
  }
  return "?";
}

MembershipReport in_open_set_M(const PhasePoint& p, double tol) {
  if (tol <= 0.0) throw DomainError("in_open_set_M: tol must be positive");
  MembershipReport rep;
  rep.gap = std::numeric_limits<double>::infinity();

  struct Side {
    const Matrix& spec;     // matrix whose eigenbasis is taken
    const Matrix& coupled;  // matrix whose off-diagonal couplings are tested
    MembershipCode code;
  };
  const Side sides[2] = {
      {p.B, p.A, MembershipCode::ZeroCouplingEntryAB},
      {p.A, p.B, MembershipCode::ZeroCouplingEntryBA},
  };

  bool real_ok[2], distinct_ok[2];
  for (int s = 0; s < 2; ++s) {
    Eigen::EigenSolver<Matrix> es(sides[s].spec);
    const Eigen::VectorXcd ev = es.eigenvalues();
    const double scale = 1.0 + spectral_radius(ev);
    real_ok[s] = true;
    for (int i = 0; i < ev.size(); ++i)
      if (std::abs(ev[i].imag()) > tol * scale) real_ok[s] = false;
    const double g = relative_gap(ev);
    rep.gap = std::min(rep.gap, g);
    distinct_ok[s] = g > tol;
  }
  if (!real_ok[0] || !real_ok[1]) rep.reasons.push_back(MembershipCode::EigenvaluesNotReal);
  if (!distinct_ok[0] || !distinct_ok[1])
    rep.reasons.push_back(MembershipCode::EigenvaluesNotDistinct);

  for (int s = 0; s < 2; ++s) {
    if (!real_ok[s] || !distinct_ok[s]) continue;  // no usable eigenbasis
    auto eig = real_eigen_decomposition(sides[s].spec, tol);
    if (!eig) {
      rep.reasons.push_back(MembershipCode::EigenvaluesNotReal);
      continue;
    }
    Eigen::PartialPivLU<Matrix> lu(eig->vectors);
    const Matrix coupled = lu.solve(sides[s].coupled * eig->vectors);
    bool ok = true;
    for (int i = 0; i < coupled.rows() && ok; ++i)
      for (int j = 0; j < coupled.cols() && ok; ++j)
        if (i != j && std::abs(coupled(i, j)) <= tol) ok = false;
    if (!ok) rep.reasons.push_back(sides[s].code);
  }

  // Dedup repeated codes while keeping first-seen order.
  std::vector<MembershipCode> uniq;
  for (auto c : rep.reasons)
    if (std::find(uniq.begin(), uniq.end(), c) == uniq.end()) uniq.push_back(c);
  rep.reasons = std::move(uniq);
  rep.in_M = rep.reasons.empty();
  return rep;
}

}  // namespace cmpair
