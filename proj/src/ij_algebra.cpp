#include "cmpair/ij_algebra.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace cmpair {

namespace {

long long checked(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(std::string("rational overflow in ") + what);
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw Error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(checked(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den, "+"),
                  checked(static_cast<__int128>(den) * o.den, "+"));
}
Rational Rational::operator-(const Rational& o) const { return *this + (-o); }
Rational Rational::operator*(const Rational& o) const {
  return Rational(checked(static_cast<__int128>(num) * o.num, "*"),
                  checked(static_cast<__int128>(den) * o.den, "*"));
}
Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw Error("rational: division by zero");
  return Rational(checked(static_cast<__int128>(num) * o.den, "/"),
                  checked(static_cast<__int128>(den) * o.num, "/"));
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

IJPolynomial::IJPolynomial(int n) : n_(n) {
  if (n < 1) throw DomainError("IJPolynomial: n must be >= 1");
}

IJPolynomial IJPolynomial::constant(int n, const Rational& c) {
  IJPolynomial p(n);
  p.add(Monomial(2 * n, 0), c);
  return p;
}

IJPolynomial IJPolynomial::variable_I(int n, int k) {
  if (k < 1 || k > n) throw DomainError("variable_I: index out of range");
  IJPolynomial p(n);
  Monomial m(2 * n, 0);
  m[k - 1] = 1;
  p.add(m, Rational(1));
  return p;
}

IJPolynomial IJPolynomial::variable_J(int n, int k) {
  if (k < 1 || k > n) throw DomainError("variable_J: index out of range");
  IJPolynomial p(n);
  Monomial m(2 * n, 0);
  m[n + k - 1] = 1;
  p.add(m, Rational(1));
  return p;
}

void IJPolynomial::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

IJPolynomial& IJPolynomial::operator+=(const IJPolynomial& o) {
  if (o.n_ != n_) throw DimensionError("IJPolynomial: mixed variable counts");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

IJPolynomial& IJPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff = coeff * c;
  return *this;
}

IJPolynomial IJPolynomial::operator*(const IJPolynomial& o) const {
  if (o.n_ != n_) throw DimensionError("IJPolynomial: mixed variable counts");
  IJPolynomial out(n_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(2 * n_);
      for (int i = 0; i < 2 * n_; ++i) {
        const int e = m1[i] + m2[i];
        if (e > 255) throw Error("IJPolynomial: exponent overflow");
        m[i] = static_cast<uint8_t>(e);
      }
      out.add(m, c1 * c2);
    }
  }
  return out;
}

double IJPolynomial::eval(const InvariantVector& v) const {
  if (static_cast<int>(v.I.size()) < n_ || static_cast<int>(v.J.size()) < n_)
    throw DimensionError("IJPolynomial::eval: invariant vector too short");
  double r = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= v.I[i];
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < m[n_ + i]; ++e) t *= v.J[i];
    r += t;
  }
  return r;
}

std::string IJPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (!first) {
      os << (a.num < 0 ? " - " : " + ");
      if (a.num < 0) a = -a;
    } else if (a.num < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    std::ostringstream vars;
    bool any = false;
    for (int i = 0; i < 2 * n_; ++i) {
      if (m[i] == 0) continue;
      if (any) vars << " ";
      any = true;
      vars << (i < n_ ? "I" : "J") << (i < n_ ? i + 1 : i - n_ + 1);
      if (m[i] > 1) vars << "^" << static_cast<int>(m[i]);
    }
    if (!any) {
      os << a.str();
    } else {
      if (!(a.num == 1 && a.den == 1)) os << a.str() << " ";
      os << vars.str();
    }
  }
  return os.str();
}

IJPolynomial elementary_symmetric(int n, int i) {
  if (i < 0) throw DomainError("elementary_symmetric: negative index");
  if (i == 0) return IJPolynomial::constant(n, Rational(1));
  if (i > n) return IJPolynomial(n);
  // k e_k = sum_{j=1..k} (-1)^{j-1} e_{k-j} p_j with p_j = j I_j for j <= n.
  std::vector<IJPolynomial> e;
  e.push_back(IJPolynomial::constant(n, Rational(1)));
  for (int k = 1; k <= i; ++k) {
    IJPolynomial acc(n);
    for (int j = 1; j <= k; ++j) {
      IJPolynomial pj = IJPolynomial::variable_I(n, j);
      pj *= Rational(j);
      IJPolynomial term = e[k - j] * pj;
      term *= Rational(j % 2 == 1 ? 1 : -1);
      acc += term;
    }
    acc *= Rational(1, k);
    e.push_back(acc);
  }
  return e[i];
}

IJPolynomial power_sum_reduced(int n, int m) {
  if (m < 1) throw DomainError("power_sum_reduced: m must be >= 1");
  if (m <= n) {
    IJPolynomial p = IJPolynomial::variable_I(n, m);
    p *= Rational(m);
    return p;
  }
  // p_m = sum_{j=1..n} (-1)^{j+1} e_j p_{m-j}.
  std::vector<IJPolynomial> p;
  p.push_back(IJPolynomial::constant(n, Rational(n)));  // p_0 = n
  for (int i = 1; i <= m; ++i) {
    if (i <= n) {
      IJPolynomial pi = IJPolynomial::variable_I(n, i);
      pi *= Rational(i);
      p.push_back(pi);
      continue;
    }
    IJPolynomial acc(n);
    for (int j = 1; j <= n; ++j) {
      IJPolynomial term = elementary_symmetric(n, j) * p[i - j];
      term *= Rational(j % 2 == 1 ? 1 : -1);
      acc += term;
    }
    p.push_back(acc);
  }
  return p[m];
}

IJPolynomial invariant_I_reduced(int n, int m) {
  if (m < 1) throw DomainError("invariant_I_reduced: m must be >= 1");
  if (m <= n) return IJPolynomial::variable_I(n, m);
  IJPolynomial p = power_sum_reduced(n, m);
  p *= Rational(1, m);
  return p;
}

IJPolynomial invariant_J_reduced(int n, int m) {
  if (m < 1) throw DomainError("invariant_J_reduced: m must be >= 1");
  if (m <= n) return IJPolynomial::variable_J(n, m);
  // From A^{m-1} = sum_{j=1..n} (-1)^{j+1} e_j A^{m-1-j}.
  IJPolynomial acc(n);
  for (int j = 1; j <= n; ++j) {
    IJPolynomial term = elementary_symmetric(n, j) * invariant_J_reduced(n, m - j);
    term *= Rational(j % 2 == 1 ? 1 : -1);
    acc += term;
  }
  return acc;
}

IJPolynomial bracket_IJ(const PencilSelector& s, WhichInvariant w1, int k, WhichInvariant w2,
                        int l, int n) {
  if (s.tag == PencilSelector::Tag::Pencil)
    throw DomainError("bracket_IJ: choose one of the two tensors");
  if (k < 1 || k > n || l < 1 || l > n) throw DomainError("bracket_IJ: index out of range");
  const bool second = s.tag == PencilSelector::Tag::P1;

  if (w1 == WhichInvariant::I && w2 == WhichInvariant::I) return IJPolynomial(n);
  if (w1 == WhichInvariant::I && w2 == WhichInvariant::J) {
    IJPolynomial p = bracket_IJ(s, WhichInvariant::J, l, WhichInvariant::I, k, n);
    p *= Rational(-1);
    return p;
  }

  if (w1 == WhichInvariant::J && w2 == WhichInvariant::I) {
    // {J_k(arg1), I_l(arg2)}: table form {J_l', I_k'} with l' = k, k' = l.
    const int jl = k, ik = l;
    if (!second) {
      if (jl == 1 && ik == 1) return IJPolynomial::constant(n, Rational(n));
      const int idx = ik + jl - 2;
      IJPolynomial p = invariant_I_reduced(n, idx);
      p *= Rational(idx);
      return p;
    }
    const int idx = ik + jl - 1;
    IJPolynomial p = invariant_I_reduced(n, idx);
    p *= Rational(idx);
    return p;
  }

  // {J_k, J_l}
  const int coeff = l - k;
  if (coeff == 0) return IJPolynomial(n);
  const int idx = second ? k + l - 1 : k + l - 2;
  IJPolynomial p = invariant_J_reduced(n, idx);
  p *= Rational(coeff);
  return p;
}

double cayley_hamilton_reduce(const std::vector<double>& I, int k) {
  const int n = static_cast<int>(I.size());
  if (n < 1) throw DomainError("cayley_hamilton_reduce: empty invariant list");
  if (k <= n) throw DomainError("cayley_hamilton_reduce: k must exceed n");
  std::vector<double> p(k + 1, 0.0);
  p[0] = n;
  for (int i = 1; i <= n; ++i) p[i] = i * I[i - 1];
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    double acc = 0.0;
    for (int j = 1; j <= i; ++j) acc += (j % 2 == 1 ? 1.0 : -1.0) * e[i - j] * p[j];
    e[i] = acc / i;
  }
  for (int m = n + 1; m <= k; ++m) {
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += (j % 2 == 1 ? 1.0 : -1.0) * e[j] * p[m - j];
    p[m] = acc;
  }
  return p[k] / k;
}

}  // namespace cmpair
