#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmpair/types.hpp"

namespace cmpair {

/// Real spectral decomposition with deterministic normalization:
/// eigenvalues ascending, eigenvector columns of unit length with the first
/// entry of magnitude > 1e-12 made positive.
struct RealEigen {
  Vector values;
  Matrix vectors;  // columns
};

/// Empty when the spectrum is not real within tol*(1 + spectral radius) or a
/// real eigenbasis cannot be extracted.
std::optional<RealEigen> real_eigen_decomposition(const Matrix& m, double tol);

enum class MembershipCode {
  EigenvaluesNotReal,
  EigenvaluesNotDistinct,
  ZeroCouplingEntryAB,  // A has a vanishing off-diagonal entry in an eigenbasis of B
  ZeroCouplingEntryBA,  // and symmetrically
};

std::string to_string(MembershipCode c);

struct MembershipReport {
  bool in_M = false;
  std::vector<MembershipCode> reasons;
  double gap = 0.0;  // smallest relative eigenvalue gap seen across A and B
};

/// Tests the three open-set conditions: real distinct spectra for A and B,
/// and nonvanishing off-diagonal couplings of each matrix in the other's
/// eigenbasis. Never throws on degenerate input; failure modes land in the
/// report. Scale-aware thresholds: tol*(1 + spectral radius) for eigenvalue
/// tests, plain tol for coupling entries.
MembershipReport in_open_set_M(const PhasePoint& p, double tol);

}  // namespace cmpair
