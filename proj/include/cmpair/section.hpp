#pragma once

#include <vector>

#include "cmpair/membership.hpp"
#include "cmpair/types.hpp"

namespace cmpair {

/// Signs eps_1..eps_{n-1} labelling a connected component of the section.
struct SignPattern {
  std::vector<int> eps;  // entries +1 / -1

  bool operator==(const SignPattern&) const = default;
};

/// A phase point lying in the section: B diagonal with strictly increasing
/// diagonal, A_{i+1,i} > 0 and A_{i,i+1} = eps_i * A_{i+1,i}.
struct SectionPoint {
  PhasePoint point;
  SignPattern pattern;
};

/// Validates the section invariants (within tol, relative to the entry
/// scale) and infers the sign pattern.
SectionPoint make_section_point(const PhasePoint& p, double tol = 1e-8);

struct CanonicalFormResult {
  SectionPoint section;
  Matrix g;  // conjugate(g, input) = section.point
};

/// The unique representative of the conjugation orbit of p in the section,
/// together with the conjugating matrix. Steps: eigenbasis of B (ascending,
/// deterministically normalized), then a diagonal rescaling fixing the
/// sub/superdiagonal sign constraints, gauge d_n = 1.
CanonicalFormResult canonical_form(const PhasePoint& p, double tol);

/// Splitting of a tangent vector at a section point into a part tangent to
/// the section and an orbit direction ([A,xi],[B,xi]); xi is normalized to
/// trace zero and is unique with that choice.
struct Decomposition {
  TangentPair section_tangent;
  Matrix generator;  // xi, trace-free
};

Decomposition tangent_decompose(const SectionPoint& sp, const TangentPair& t);

/// Section-tangent part of the hierarchy field (0, A^{k-1}):
/// d_k A = [xi_k, A], d_k B = [xi_k, B] + A^{k-1}.
TangentPair projected_flow(const SectionPoint& sp, int k);

namespace detail {
/// Decomposition core working on raw data (B given by its diagonal); used by
/// the integrator on states that are only approximately on the section.
struct RawDecomposition {
  Matrix a_dot;
  Vector b_dot;
  Matrix xi;
};
RawDecomposition tangent_decompose_raw(const Matrix& a, const Vector& b_diag,
                                       const std::vector<int>& eps, const Matrix& v,
                                       const Matrix& w);
}  // namespace detail

}  // namespace cmpair
