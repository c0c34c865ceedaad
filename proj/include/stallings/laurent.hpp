#ifndef STALLINGS_LAURENT_HPP
#define STALLINGS_LAURENT_HPP

#include <string>
#include <vector>

#include "stallings/rational_function.hpp"

namespace stallings {

/// Truncated expansion of a rational function in powers of 1/n, exact
/// rational coefficients: sum of coefficients[t] / n^(leading_exponent + t)
/// for t = 0..order, with error O(1/n^(leading_exponent + order + 1)).
/// For a nonzero function the leading coefficient is nonzero.
class LaurentSeries {
 public:
  LaurentSeries(int leading_exponent, std::vector<BigRat> coefficients);

  bool is_zero() const { return zero_; }
  int leading_exponent() const { return leading_exponent_; }
  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<BigRat>& coefficients() const { return coefficients_; }

  /// Coefficient of n^(-exponent); throws outside the computed window.
  BigRat coeff_at_exponent(int exponent) const;
  bool in_window(int exponent) const;

  /// e.g. "1 + 1/n + 1/n^2 + O(1/n^3)"
  std::string str() const;

 private:
  int leading_exponent_ = 0;
  std::vector<BigRat> coefficients_;
  bool zero_ = false;
};

/// Exact expansion of f as n -> infinity, truncated after `order` terms past
/// the leading one. The leading exponent is deg(denominator) - deg(numerator).
LaurentSeries laurent_expand(const RationalFunction& f, int order);

}  // namespace stallings

#endif
