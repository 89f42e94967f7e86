#pragma once

#include <map>
#include <string>

#include "cmpair/types.hpp"

namespace cmpair {

/// Lexicographically minimal cyclic rotation of a word ('A' < 'B').
std::string canonical_rotation(const std::string& word);

/// A finite linear combination of cyclic words in the letters {A,B},
/// representing the conjugation-invariant function  sum_w c_w tr(w(A,B)).
/// Words are stored in canonical rotation; zero coefficients are dropped.
/// The empty word stands for tr(I) = n.
class TraceExpr {
 public:
  TraceExpr() = default;

  static TraceExpr word(const std::string& w, double coeff = 1.0);

  void add_term(const std::string& w, double coeff);

  TraceExpr& operator+=(const TraceExpr& other);
  TraceExpr& operator*=(double c);
  friend TraceExpr operator+(TraceExpr a, const TraceExpr& b) { return a += b; }
  friend TraceExpr operator*(double c, TraceExpr e) { return e *= c; }
  friend TraceExpr operator-(TraceExpr a, const TraceExpr& b) {
    TraceExpr nb = b;
    nb *= -1.0;
    return a += nb;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::string, double>& terms() const { return terms_; }

  double eval(const PhasePoint& p) const;

  /// Exact gradient under the trace pairing: for each occurrence of a letter,
  /// the product of the remaining letters read cyclically from the next one.
  CovectorPair grad(const PhasePoint& p) const;

  std::string str() const;

 private:
  std::map<std::string, double> terms_;
};

/// H_k = (1/k) tr A^k.
TraceExpr hamiltonian_expr(int k);

/// I_k = (1/k) tr A^k  and  J_k = tr(A^{k-1} B)  as trace expressions.
TraceExpr invariant_I_expr(int k);
TraceExpr invariant_J_expr(int k);

}  // namespace cmpair
