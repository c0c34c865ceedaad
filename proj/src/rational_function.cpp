#include "stallings/rational_function.hpp"

#include <stdexcept>

namespace stallings {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator,
                                   int validity_threshold)
    : num_(std::move(numerator)),
      den_(std::move(denominator)),
      validity_threshold_(std::max(validity_threshold, 1)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0 || g.coeff(0) != 1) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
  if (c > 1) {
    num_ = num_.divided_by_constant(c);
    den_ = den_.divided_by_constant(c);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_,
                          std::max(validity_threshold_, rhs.validity_threshold_));
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
  return *this + (-rhs);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -f.num_;
  return f;
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.num_, den_ * rhs.den_,
                          std::max(validity_threshold_, rhs.validity_threshold_));
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFunction(num_ * rhs.den_, den_ * rhs.num_,
                          std::max(validity_threshold_, rhs.validity_threshold_));
}

BigRat RationalFunction::evaluate_at(long long n) const {
  if (n < validity_threshold_)
    throw std::domain_error("evaluation at n = " + std::to_string(n) +
                            " below validity threshold n >= " +
                            std::to_string(validity_threshold_));
  BigInt x(n);
  BigInt d = den_.evaluate(x);
  if (d == 0) throw std::domain_error("denominator vanishes at n = " + std::to_string(n));
  return BigRat(num_.evaluate(x), d);
}

std::string RationalFunction::str() const {
  if (den_ == Polynomial(1)) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  bool n_simple = num_.is_zero() || (num_.degree() <= 0) ||
                  n.find(' ') == std::string::npos;
  bool d_simple = (den_.degree() <= 0) || d.find(' ') == std::string::npos;
  std::string out = n_simple ? n : "(" + n + ")";
  out += "/";
  out += d_simple ? d : "(" + d + ")";
  return out;
}

std::string RationalFunction::str_with_validity() const {
  return str() + ", valid for n >= " + std::to_string(validity_threshold_);
}

}  // namespace stallings
