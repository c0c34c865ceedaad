#include "stallings/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace stallings {

LaurentSeries::LaurentSeries(int leading_exponent, std::vector<BigRat> coefficients)
    : leading_exponent_(leading_exponent), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("empty Laurent series");
  zero_ = true;
  for (const auto& c : coefficients_)
    if (c != 0) zero_ = false;
  if (!zero_ && coefficients_.front() == 0)
    throw std::invalid_argument("nonzero Laurent series must have nonzero leading coefficient");
}

bool LaurentSeries::in_window(int exponent) const {
  return exponent >= leading_exponent_ &&
         exponent <= leading_exponent_ + order();
}

BigRat LaurentSeries::coeff_at_exponent(int exponent) const {
  if (!in_window(exponent))
    throw std::out_of_range("exponent outside the computed Laurent window");
  return coefficients_[exponent - leading_exponent_];
}

namespace {

std::string rat_str(const BigRat& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

std::string term_str(const BigRat& coeff, int exponent) {
  BigRat a = coeff < 0 ? BigRat(-coeff) : coeff;
  bool unit = (a == 1);
  std::string c = rat_str(a);
  bool fractional = c.find('/') != std::string::npos;
  if (exponent == 0) return c;
  std::string pw = exponent == 1 ? "n" : "n^" + std::to_string(exponent);
  if (exponent < 0) {
    std::string up = exponent == -1 ? "n" : "n^" + std::to_string(-exponent);
    return unit ? up : (fractional ? "(" + c + ")*" : c + "*") + up;
  }
  if (unit) return "1/" + pw;
  return (fractional ? "(" + c + ")" : c) + "/" + pw;
}

}  // namespace

std::string LaurentSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (int t = 0; t <= order(); ++t) {
    const BigRat& c = coefficients_[t];
    if (c == 0) continue;
    int e = leading_exponent_ + t;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << term_str(c, e);
  }
  if (first) out << "0";
  int tail = leading_exponent_ + order() + 1;
  out << " + O(1/n" << (tail == 1 ? "" : "^" + std::to_string(tail)) << ")";
  return out.str();
}

LaurentSeries laurent_expand(const RationalFunction& f, int order) {
  if (order < 0) throw std::invalid_argument("laurent_expand requires order >= 0");
  if (f.is_zero()) return LaurentSeries(0, std::vector<BigRat>(order + 1, BigRat(0)));
  const Polynomial& p = f.numerator();
  const Polynomial& q = f.denominator();
  int dp = p.degree();
  int dq = q.degree();
  // substitute m = 1/n: f = n^(dp-dq) * A(m)/B(m) with A, B the reversed
  // coefficient sequences; B(0) = lc(q) != 0
  auto rev = [](const Polynomial& poly, int upto) {
    std::vector<BigRat> r(upto + 1, BigRat(0));
    for (int t = 0; t <= upto; ++t) r[t] = BigRat(poly.coeff(poly.degree() - t));
    return r;
  };
  std::vector<BigRat> a = rev(p, order);
  std::vector<BigRat> b = rev(q, order);
  std::vector<BigRat> c(order + 1, BigRat(0));
  for (int t = 0; t <= order; ++t) {
    BigRat acc = a[t];
    for (int i = 1; i <= t; ++i) acc -= b[i] * c[t - i];
    c[t] = acc / b[0];
  }
  return LaurentSeries(dq - dp, std::move(c));
}

}  // namespace stallings
