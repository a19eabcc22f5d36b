#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tlenv {

// Integer polynomial with dense ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<mpz_class> coeffs);

  static Poly monomial(const mpz_class& c, int degree);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& lead() const { return c_.back(); }
  // Index of the lowest nonzero coefficient.
  int valuation() const;
  bool is_monomial() const;
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  mpz_class content() const;
  mpz_class coeff(int i) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const mpz_class& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly shifted(int k) const;  // multiply by x^k, k >= 0
  Poly divided_by_content(const mpz_class& c) const;
  double evaluate(double x) const;

  // Printed ascending: "c0 + c1*x + c2*x^2".
  std::string to_string(char var = 'd') const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

Poly poly_gcd(const Poly& a, const Poly& b);
// a / b where b divides a exactly over Z[x]; throws otherwise.
Poly poly_div_exact(const Poly& a, const Poly& b);
Poly parse_poly(std::string_view text, char var = 'd');

// Element of Q(d): reduced num/den, den with positive leading coefficient.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Poly num) : num_(std::move(num)), den_(1) {}
  Scalar(Poly num, Poly den);

  static Scalar delta();
  // d^k for any integer k.
  static Scalar delta_pow(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Throws PoleError when |den(x)| < 1e-12.
  double evaluate(double x) const;
  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  struct Reduced {};
  Scalar(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace tlenv
