#pragma once

#include <vector>

#include "cmpair/ij_algebra.hpp"
#include "cmpair/pencil.hpp"
#include "cmpair/types.hpp"

namespace cmpair {

/// Ordered particle data x_1 < ... < x_n with momenta y. For n = 2 the
/// attractive domain condition |y1 - y2| (x2 - x1) > 2 is part of the type;
/// for larger n domain membership is checked dynamically by the consumers.
struct CMState {
  std::vector<double> x;
  std::vector<double> y;

  CMState(std::vector<double> x_, std::vector<double> y_);
  int n() const { return static_cast<int>(x.size()); }
};

/// Spectral data lambda (ascending) and weights mu of the dual gauge.
struct QPrimeData {
  std::vector<double> lambda;
  std::vector<double> mu;
};

/// I_k = (1/k) tr A^k, J_k = tr(A^{k-1} B), k = 1..n.
InvariantVector invariants_map(const PhasePoint& p);

/// Constant matrix with entries 1 - delta_ij.
Matrix mu_matrix(int n);

/// L_ii = y_i, L_ij = 1/(x_i - x_j).
Matrix lax_matrix(const CMState& c);

/// (A, B) = (L, diag(x)).
PhasePoint embed_Q(const CMState& c);

/// True iff [B,A] + I has numerical rank one: sigma_2 < tol * sigma_1.
bool rank1_check(const PhasePoint& p, double tol);

/// Inverse of embed_Q up to conjugation: diagonalizes B, rescales so that
/// [B,A] + I becomes the all-ones matrix, and reads off (x, y).
CMState normalize_to_Q(const PhasePoint& p, double tol);

/// xi_ij = (L^{k-1})_ij / (x_i - x_j), diagonal -1/2 sum_{l != i}(xi_il + xi_li).
Matrix xi_closed_form(const CMState& c, int k);

struct CMFlow {
  std::vector<double> xdot;
  std::vector<double> ydot;
};

/// k-th hierarchy flow in particle coordinates:
/// xdot_i = (L^{k-1})_ii, ydot_i = ([xi_k, L])_ii.
CMFlow cm_flow(const CMState& c, int k);

/// Recovers (lambda, mu) from invariants: Newton's identities give the
/// characteristic polynomial, companion-matrix roots give lambda, and a
/// Vandermonde solve gives mu.
QPrimeData pi_inverse(const InvariantVector& v, double tol);

/// Forward evaluation I_k = (1/k) sum lambda^k, J_k = sum mu lambda^{k-1}.
InvariantVector qprime_invariants(const QPrimeData& q);

/// The pair (diag(lambda), L') with L'_ij = 1/(lambda_j - lambda_i) and
/// diagonal mu; its invariants are qprime_invariants(q).
PhasePoint embed_QPrime(const QPrimeData& q);

enum class N2Coord { x1, x2, y1, y2 };

/// Discriminant-like denominator 4 x12^2 - (y1 - y2)^2, x12 = 1/(x1 - x2).
double n2_delta(const CMState& c);

/// Closed-form second bracket of two particle coordinates for n = 2.
/// Refuses evaluation near the singular locus delta = 0.
double n2_bracket1_xy(const CMState& c, N2Coord f, N2Coord g);

/// Jacobian d(I1, I2, J1, J2) / d(x1, x2, y1, y2) at an n = 2 state.
Eigen::Matrix4d n2_invariant_jacobian(const CMState& c);

/// (A, B) -> (-B, A).
PhasePoint duality_swap(const PhasePoint& p);

/// f -> f o swap as a trace expression: letters exchanged, sign (-1)^{#A}.
TraceExpr compose_with_duality_swap(const TraceExpr& f);

/// Pushforwards of the pair under the swap (the exchanged-role tensors):
/// P0 is preserved; P1 becomes (xi, eta) -> (eta B - [A, xi], -B xi).
TangentPair p0_dual_apply(const CovectorPair& c);
TangentPair p1_dual_apply(const PhasePoint& p, const CovectorPair& c);
double bracket_numeric_dual(const PencilSelector& s, const TraceExpr& f, const TraceExpr& g,
                            const PhasePoint& p);

}  // namespace cmpair
