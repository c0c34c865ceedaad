#ifndef STALLINGS_POLYNOMIAL_HPP
#define STALLINGS_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace stallings {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense polynomial in the formal variable n with exact integer
/// coefficients (ascending order, no trailing zeros). Degrees stay small
/// here (bounded by vertex counts), coefficients do not.
class Polynomial {
 public:
  Polynomial() = default;  // zero
  Polynomial(BigInt constant);
  Polynomial(long long constant) : Polynomial(BigInt(constant)) {}
  static Polynomial variable();
  static Polynomial monomial(BigInt coeff, int degree);
  static Polynomial from_coefficients(std::vector<BigInt> ascending);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  BigInt coeff(int i) const;
  const BigInt& leading() const;

  Polynomial operator+(const Polynomial&) const;
  Polynomial operator-(const Polynomial&) const;
  Polynomial operator*(const Polynomial&) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& p) { return *this = *this + p; }
  Polynomial& operator*=(const Polynomial& p) { return *this = *this * p; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  BigInt evaluate(const BigInt& x) const;
  BigRat evaluate(const BigRat& x) const;

  /// gcd of coefficients (nonnegative; 0 for the zero polynomial)
  BigInt content() const;
  Polynomial divided_by_constant(const BigInt& c) const;  // exact, throws otherwise

  std::string str(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// A gcd of two integer polynomials: primitive with positive leading
/// coefficient (primitive pseudo-remainder sequence).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// (n)_r = n (n-1) ... (n-r+1); (n)_0 = 1. Requires r >= 0.
Polynomial falling_factorial(int r);

/// Unsigned Stirling number of the first kind in the norm convention:
/// [r]_j counts permutations of r points that are products of j
/// transpositions and no fewer (i.e. with exactly r - j cycles).
/// Requires 0 <= j <= max(r-1, 0).
BigInt stirling_unsigned(int r, int j);

}  // namespace stallings

#endif
