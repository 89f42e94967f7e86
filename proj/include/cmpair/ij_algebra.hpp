#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cmpair/pencil.hpp"
#include "cmpair/types.hpp"

namespace cmpair {

/// The invariant coordinates I_1..I_n, J_1..J_n of a phase point.
struct InvariantVector {
  std::vector<double> I;
  std::vector<double> J;
};

/// Exact rational arithmetic for the coefficients of the reduced bracket
/// tables (numerators/denominators stay tiny at desk scale).
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(long long n, long long d);

  Rational operator+(const Rational&) const;
  Rational operator-(const Rational&) const;
  Rational operator*(const Rational&) const;
  Rational operator/(const Rational&) const;
  Rational operator-() const { return Rational(-num, den); }
  bool operator==(const Rational&) const = default;

  bool is_zero() const { return num == 0; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

/// Polynomial in the 2n variables I_1..I_n, J_1..J_n with rational
/// coefficients. Monomials are exponent vectors (I-block then J-block).
class IJPolynomial {
 public:
  using Monomial = std::vector<uint8_t>;

  explicit IJPolynomial(int n);

  static IJPolynomial constant(int n, const Rational& c);
  static IJPolynomial variable_I(int n, int k);
  static IJPolynomial variable_J(int n, int k);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  IJPolynomial& operator+=(const IJPolynomial&);
  IJPolynomial& operator*=(const Rational&);
  IJPolynomial operator*(const IJPolynomial&) const;
  friend IJPolynomial operator+(IJPolynomial a, const IJPolynomial& b) { return a += b; }
  friend IJPolynomial operator-(IJPolynomial a, const IJPolynomial& b) {
    IJPolynomial nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  bool operator==(const IJPolynomial&) const = default;

  double eval(const InvariantVector& v) const;

  /// e.g. "3 I1 I2 - 1/2 I1^3"
  std::string str() const;

 private:
  void add(const Monomial& m, const Rational& c);
  int n_;
  std::map<Monomial, Rational> terms_;
};

/// Power sum p_m = sum lambda^m of the n eigenvalues of A, rewritten in the
/// variables I_1..I_n (valid for any m >= 1).
IJPolynomial power_sum_reduced(int n, int m);

/// Elementary symmetric function e_i of the eigenvalues, in I variables
/// (zero for i > n).
IJPolynomial elementary_symmetric(int n, int i);

/// I_m and J_m as polynomials in I_1..I_n, J_1..J_n; indices above n are
/// rewritten through the characteristic-polynomial recursion.
IJPolynomial invariant_I_reduced(int n, int m);
IJPolynomial invariant_J_reduced(int n, int m);

enum class WhichInvariant { I, J };

/// Closed-form bracket of two invariant coordinates under either tensor:
///   {J_l, I_k}_0 = (k+l-2) I_{k+l-2}   (exception {J_1, I_1}_0 = n)
///   {J_k, J_l}_0 = (l-k)   J_{k+l-2}
///   {J_l, I_k}_1 = (k+l-1) I_{k+l-1}
///   {J_k, J_l}_1 = (l-k)   J_{k+l-1}
///   {I_k, I_l}   = 0 for both,
/// with indices above n reduced. Antisymmetric in its arguments.
IJPolynomial bracket_IJ(const PencilSelector& s, WhichInvariant w1, int k, WhichInvariant w2,
                        int l, int n);

/// Numeric reduction: the value of I_k (k > n) determined by I_1..I_n.
double cayley_hamilton_reduce(const std::vector<double>& I, int k);

}  // namespace cmpair
