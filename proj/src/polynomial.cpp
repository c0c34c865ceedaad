#include "stallings/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace stallings {

Polynomial::Polynomial(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

Polynomial Polynomial::monomial(BigInt coeff, int degree) {
  Polynomial p;
  if (coeff != 0) {
    p.coeffs_.assign(degree + 1, BigInt(0));
    p.coeffs_[degree] = std::move(coeff);
  }
  return p;
}

Polynomial Polynomial::from_coefficients(std::vector<BigInt> ascending) {
  Polynomial p;
  p.coeffs_ = std::move(ascending);
  p.trim();
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

const BigInt& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return from_coefficients(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return from_coefficients(std::move(out));
}

BigInt Polynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat Polynomial::evaluate(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

BigInt Polynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? BigInt(-g) : g;
}

Polynomial Polynomial::divided_by_constant(const BigInt& c) const {
  if (c == 0) throw std::domain_error("division by zero constant");
  Polynomial p = *this;
  for (auto& x : p.coeffs_) {
    if (x % c != 0) throw std::domain_error("constant does not divide polynomial");
    x /= c;
  }
  return p;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = coeffs_[d];
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (d == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << var;
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

namespace {

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
  int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    int shift = a.degree() - db;
    Polynomial scaled = Polynomial::monomial(a.leading(), shift) * b;
    a = a * Polynomial(b.leading()) - scaled;
  }
  return a;
}

}  // namespace

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  auto primitive = [](const Polynomial& p) {
    BigInt c = p.content();
    return c <= 1 ? p : p.divided_by_constant(c);
  };
  a = primitive(a);
  b = primitive(b);
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = primitive(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a.leading() < 0 ? -a : a;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return Polynomial();
  if (a.degree() < b.degree()) throw std::domain_error("polynomial division is not exact");
  std::vector<BigInt> q(a.degree() - b.degree() + 1, BigInt(0));
  Polynomial rem = a;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    if (rem.leading() % b.leading() != 0)
      throw std::domain_error("polynomial division is not exact");
    BigInt c = rem.leading() / b.leading();
    int d = rem.degree() - b.degree();
    q[d] = c;
    rem = rem - Polynomial::monomial(c, d) * b;
  }
  if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
  return Polynomial::from_coefficients(std::move(q));
}

Polynomial falling_factorial(int r) {
  if (r < 0) throw std::invalid_argument("falling factorial requires r >= 0");
  Polynomial p(1);
  for (int i = 0; i < r; ++i) p = p * (Polynomial::variable() - Polynomial(i));
  return p;
}

BigInt stirling_unsigned(int r, int j) {
  if (r < 0 || j < 0 || j > std::max(r - 1, 0))
    throw std::invalid_argument("stirling_unsigned out of range");
  // [r]_j = c(r, r - j) where c counts permutations by cycle count:
  // c(m, t) = c(m-1, t-1) + (m-1) c(m-1, t)
  int cycles = r - j;
  std::vector<std::vector<BigInt>> c(r + 1, std::vector<BigInt>(r + 1, BigInt(0)));
  c[0][0] = 1;
  for (int m = 1; m <= r; ++m)
    for (int t = 1; t <= m; ++t) c[m][t] = c[m - 1][t - 1] + BigInt(m - 1) * c[m - 1][t];
  return r == 0 ? BigInt(1) : c[r][cycles];
}

}  // namespace stallings
