#pragma once

#include "cmpair/trace_word.hpp"
#include "cmpair/types.hpp"

namespace cmpair {

/// Selects the canonical tensor, the second tensor, or a member P0 + t*P1
/// of the pencil they span.
struct PencilSelector {
  enum class Tag { P0, P1, Pencil };
  Tag tag = Tag::P0;
  double t = 0.0;

  static PencilSelector p0() { return {Tag::P0, 0.0}; }
  static PencilSelector p1() { return {Tag::P1, 0.0}; }
  static PencilSelector pencil(double t) {
    if (!std::isfinite(t)) throw DomainError("PencilSelector: t must be finite");
    return {Tag::Pencil, t};
  }
};

/// Canonical tensor: (xi, eta) -> (eta, -xi).
TangentPair p0_apply(const CovectorPair& c);

/// Second tensor: (xi, eta) -> (A eta, -xi A + [B, eta]).
TangentPair p1_apply(const PhasePoint& p, const CovectorPair& c);

TangentPair pencil_apply(const PencilSelector& s, const PhasePoint& p, const CovectorPair& c);

/// Recursion operator N = P1 P0^{-1}: (V, W) -> (A V, [B, V] + W A).
TangentPair recursion_apply(const PhasePoint& p, const TangentPair& t);

/// Transpose N*: (xi, eta) -> (xi A + [eta, B], A eta).
CovectorPair recursion_transpose_apply(const PhasePoint& p, const CovectorPair& c);

/// {f,g} at p, computed as <dg, P df>.  With this orientation
/// {tr B, tr A}_0 = n and the second bracket of F1, F2 with differentials
/// (xi_i, eta_i) is tr(A(eta1 xi2 - eta2 xi1) + B[eta1, eta2]).
double bracket_numeric(const PencilSelector& s, const TraceExpr& f, const TraceExpr& g,
                       const PhasePoint& p);

/// Closed-form bracket of two invariant trace expressions; the result is
/// again a trace expression (necklace product over pairs of letter
/// positions). Only the pure tensors are closed in this sense.
TraceExpr necklace_bracket(const PencilSelector& s, const TraceExpr& f, const TraceExpr& g);

/// H_k = (1/k) tr A^k and its machinery.
double hierarchy_hamiltonian(int k, const PhasePoint& p);
CovectorPair hierarchy_gradient(int k, const PhasePoint& p);  // dH_k = (A^{k-1}, 0)
TangentPair hierarchy_field(int k, const PhasePoint& p);      // X_k = (0, A^{k-1}) = -P0 dH_k

/// Cyclic sum {f,{g,h}} + {g,{h,f}} + {h,{f,g}} at p. Inner brackets use the
/// exact necklace closure, the outer one the numeric tensor, so the result
/// measures the Jacobi defect free of finite-difference noise.
double jacobi_defect(const PencilSelector& s, const TraceExpr& f, const TraceExpr& g,
                     const TraceExpr& h, const PhasePoint& p);

/// Torsion of the recursion operator on constant fields with values t1, t2,
/// with the Lie brackets of the image fields taken by central differences of
/// step h. Vanishes (to rounding amplified by 1/h) for this N.
TangentPair nijenhuis_torsion_numeric(const PhasePoint& p, const TangentPair& t1,
                                      const TangentPair& t2, double h);

}  // namespace cmpair
