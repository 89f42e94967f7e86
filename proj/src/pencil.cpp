#include "cmpair/pencil.hpp"

namespace cmpair {

TangentPair p0_apply(const CovectorPair& c) { return {c.eta, -c.xi}; }

TangentPair p1_apply(const PhasePoint& p, const CovectorPair& c) {
  return {p.A * c.eta, -c.xi * p.A + commutator(p.B, c.eta)};
}

TangentPair pencil_apply(const PencilSelector& s, const PhasePoint& p, const CovectorPair& c) {
  switch (s.tag) {
    case PencilSelector::Tag::P0: return p0_apply(c);
    case PencilSelector::Tag::P1: return p1_apply(p, c);
    case PencilSelector::Tag::Pencil: return p0_apply(c) + s.t * p1_apply(p, c);
  }
  throw Error("pencil_apply: bad selector");
}

TangentPair recursion_apply(const PhasePoint& p, const TangentPair& t) {
  return {p.A * t.V, commutator(p.B, t.V) + t.W * p.A};
}

CovectorPair recursion_transpose_apply(const PhasePoint& p, const CovectorPair& c) {
  return {c.xi * p.A + commutator(c.eta, p.B), p.A * c.eta};
}

double bracket_numeric(const PencilSelector& s, const TraceExpr& f, const TraceExpr& g,
                       const PhasePoint& p) {
  return pairing(g.grad(p), pencil_apply(s, p, f.grad(p)));
}

TraceExpr necklace_bracket(const PencilSelector& s, const TraceExpr& f, const TraceExpr& g) {
  if (s.tag == PencilSelector::Tag::Pencil)
    throw DomainError("necklace_bracket: only the pure tensors have a closed form");
  const bool second = s.tag == PencilSelector::Tag::P1;
  TraceExpr out;
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      const double c = ca * cb;
      for (size_t i = 0; i < a.size(); ++i) {
        const std::string arest = a.substr(i + 1) + a.substr(0, i);
        for (size_t j = 0; j < b.size(); ++j) {
          const std::string brest = b.substr(j + 1) + b.substr(0, j);
          if (!second) {
            if (a[i] == 'B' && b[j] == 'A')
              out.add_term(arest + brest, c);
            else if (a[i] == 'A' && b[j] == 'B')
              out.add_term(arest + brest, -c);
          } else {
            // Expansion of tr(A(eta1 xi2 - eta2 xi1) + B[eta1, eta2]) over
            // the letter positions contributing to each gradient factor.
            if (a[i] == 'B' && b[j] == 'A') {
              out.add_term("A" + arest + brest, c);
            } else if (a[i] == 'A' && b[j] == 'B') {
              out.add_term("A" + brest + arest, -c);
            } else if (a[i] == 'B' && b[j] == 'B') {
              out.add_term("B" + arest + brest, c);
              out.add_term("B" + brest + arest, -c);
            }
          }
        }
      }
    }
  }
  return out;
}

double hierarchy_hamiltonian(int k, const PhasePoint& p) {
  if (k < 1) throw DomainError("hierarchy_hamiltonian: k must be >= 1");
  return mat_pow(p.A, k).trace() / k;
}

CovectorPair hierarchy_gradient(int k, const PhasePoint& p) {
  if (k < 1) throw DomainError("hierarchy_gradient: k must be >= 1");
  return {mat_pow(p.A, k - 1), Matrix::Zero(p.n(), p.n())};
}

TangentPair hierarchy_field(int k, const PhasePoint& p) {
  if (k < 1) throw DomainError("hierarchy_field: k must be >= 1");
  return {Matrix::Zero(p.n(), p.n()), mat_pow(p.A, k - 1)};
}

double jacobi_defect(const PencilSelector& s, const TraceExpr& f, const TraceExpr& g,
                     const TraceExpr& h, const PhasePoint& p) {
  auto inner = [&](const TraceExpr& u, const TraceExpr& v) -> TraceExpr {
    if (s.tag != PencilSelector::Tag::Pencil) return necklace_bracket(s, u, v);
    TraceExpr e = necklace_bracket(PencilSelector::p0(), u, v);
    e += s.t * necklace_bracket(PencilSelector::p1(), u, v);
    return e;
  };
  return bracket_numeric(s, f, inner(g, h), p) + bracket_numeric(s, g, inner(h, f), p) +
         bracket_numeric(s, h, inner(f, g), p);
}

TangentPair nijenhuis_torsion_numeric(const PhasePoint& p, const TangentPair& t1,
                                      const TangentPair& t2, double h) {
  if (h <= 0.0) throw DomainError("nijenhuis_torsion_numeric: h must be positive");
  // Directional derivative, along u, of the field q -> N_q(w).
  auto dN = [&](const TangentPair& w, const TangentPair& u) -> TangentPair {
    const PhasePoint plus(p.A + h * u.V, p.B + h * u.W);
    const PhasePoint minus(p.A - h * u.V, p.B - h * u.W);
    return (1.0 / (2.0 * h)) * (recursion_apply(plus, w) - recursion_apply(minus, w));
  };
  const TangentPair n1 = recursion_apply(p, t1);
  const TangentPair n2 = recursion_apply(p, t2);
  // [N t1, N t2] - N([N t1, t2] + [t1, N t2]); [t1, t2] = 0 for constants.
  const TangentPair lie_images = dN(t2, n1) - dN(t1, n2);
  const TangentPair mixed = dN(t2, t1) - dN(t1, t2);
  return lie_images - recursion_apply(p, mixed);
}

}  // namespace cmpair
