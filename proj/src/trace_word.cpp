#include "cmpair/trace_word.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cmpair {

namespace {

void check_letters(const std::string& w) {
  for (char c : w)
    if (c != 'A' && c != 'B') throw DomainError("trace word: letters must be 'A' or 'B'");
}

Matrix word_product(const std::string& w, const PhasePoint& p) {
  Matrix r = Matrix::Identity(p.n(), p.n());
  for (char c : w) r = r * (c == 'A' ? p.A : p.B);
  return r;
}

}  // namespace

std::string canonical_rotation(const std::string& word) {
  if (word.size() < 2) return word;
  std::string best = word;
  std::string rot = word;
  for (size_t i = 1; i < word.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

TraceExpr TraceExpr::word(const std::string& w, double coeff) {
  TraceExpr e;
  e.add_term(w, coeff);
  return e;
}

void TraceExpr::add_term(const std::string& w, double coeff) {
  check_letters(w);
  if (coeff == 0.0) return;
  const std::string key = canonical_rotation(w);
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  }
}

TraceExpr& TraceExpr::operator+=(const TraceExpr& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

TraceExpr& TraceExpr::operator*=(double c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

double TraceExpr::eval(const PhasePoint& p) const {
  double r = 0.0;
  for (const auto& [w, c] : terms_) {
    if (w.empty())
      r += c * static_cast<double>(p.n());
    else
      r += c * word_product(w, p).trace();
  }
  return r;
}

CovectorPair TraceExpr::grad(const PhasePoint& p) const {
  const int n = p.n();
  Matrix xi = Matrix::Zero(n, n), eta = Matrix::Zero(n, n);
  for (const auto& [w, c] : terms_) {
    for (size_t i = 0; i < w.size(); ++i) {
      const std::string rest = w.substr(i + 1) + w.substr(0, i);
      Matrix m = c * word_product(rest, p);
      if (w[i] == 'A')
        xi += m;
      else
        eta += m;
    }
  }
  return {xi, eta};
}

std::string TraceExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    const double a = std::abs(c);
    if (a != 1.0 || w.empty()) os << a;
    if (!w.empty()) {
      if (a != 1.0) os << "*";
      os << "tr(" << w << ")";
    } else {
      os << "*tr(1)";
    }
  }
  return os.str();
}

TraceExpr hamiltonian_expr(int k) {
  if (k < 1) throw DomainError("hamiltonian_expr: k must be >= 1");
  return TraceExpr::word(std::string(k, 'A'), 1.0 / k);
}

TraceExpr invariant_I_expr(int k) { return hamiltonian_expr(k); }

TraceExpr invariant_J_expr(int k) {
  if (k < 1) throw DomainError("invariant_J_expr: k must be >= 1");
  return TraceExpr::word(std::string(k - 1, 'A') + "B", 1.0);
}

}  // namespace cmpair
