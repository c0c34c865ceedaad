#ifndef STALLINGS_RATIONAL_FUNCTION_HPP
#define STALLINGS_RATIONAL_FUNCTION_HPP

#include <string>

#include "stallings/polynomial.hpp"

namespace stallings {

/// Exact ratio of integer-coefficient polynomials in n, kept in canonical
/// form: numerator and denominator coprime, contents coprime, denominator
/// leading coefficient positive. Carries a validity threshold n0: the
/// combinatorial formulas behind these functions hold for n >= n0 only,
/// and evaluation below n0 is an error rather than a silent wrong value.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}  // zero
  RationalFunction(Polynomial numerator, Polynomial denominator, int validity_threshold = 1);

  static RationalFunction constant(BigInt c) { return RationalFunction(Polynomial(std::move(c)), Polynomial(1)); }
  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return constant(1); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  int validity_threshold() const { return validity_threshold_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction&) const;
  RationalFunction operator-(const RationalFunction&) const;
  RationalFunction operator*(const RationalFunction&) const;
  RationalFunction operator/(const RationalFunction&) const;
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& f) { return *this = *this + f; }

  /// Equality as rational functions (thresholds are not compared).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact value at an integer point; throws std::domain_error below the
  /// validity threshold.
  BigRat evaluate_at(long long n) const;

  /// "n/(n - 1)" (denominator omitted when it is 1, parenthesized when
  /// it has several terms).
  std::string str() const;
  /// str() plus ", valid for n >= n0".
  std::string str_with_validity() const;

 private:
  void normalize();
  Polynomial num_, den_;
  int validity_threshold_ = 1;
};

}  // namespace stallings

#endif
