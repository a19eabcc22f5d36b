#include "tlenv/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "tlenv/errors.hpp"

namespace tlenv {

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpz_class& c, int degree) {
  Poly p;
  if (c != 0) {
    p.c_.assign(degree + 1, mpz_class(0));
    p.c_[degree] = c;
  }
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

bool Poly::is_monomial() const {
  return !c_.empty() && valuation() == degree();
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const mpz_class& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= c;
  return *this;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(k, mpz_class(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::divided_by_content(const mpz_class& c) const {
  Poly r = *this;
  for (auto& a : r.c_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return r;
}

double Poly::evaluate(double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return static_cast<double>(acc);
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class mag = abs(c_[i]);
    bool neg = c_[i] < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

namespace {

// Pseudo-remainder of a by b.
Poly prem(Poly a, const Poly& b) {
  const int db = b.degree();
  const mpz_class& lb = b.lead();
  while (!a.is_zero() && a.degree() >= db) {
    int shift = a.degree() - db;
    mpz_class la = a.lead();
    a *= lb;
    Poly t = b.shifted(shift);
    t *= la;
    a -= t;
  }
  return a;
}

Poly primitive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  if (p.lead() < 0) c = -c;
  return c == 1 ? p : p.divided_by_content(c);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return !b.is_zero() && b.lead() < 0 ? -b : b;
  if (b.is_zero()) return a.lead() < 0 ? -a : a;
  mpz_class c;
  mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.degree() == 0 || b.degree() == 0) return Poly(std::vector<mpz_class>{c});
  if (a.is_monomial() || b.is_monomial()) {
    return Poly::monomial(c, std::min(a.valuation(), b.valuation()));
  }
  Poly x = primitive(a), y = primitive(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = prem(x, y);
    x = std::move(y);
    y = primitive(r);
  }
  x = primitive(x);
  x *= c;
  return x;
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) return a;
  if (b.degree() == 0) {
    Poly r = a;
    for (const auto& v : r.coeffs())
      if (!mpz_divisible_p(v.get_mpz_t(), b.lead().get_mpz_t()))
        throw ArithmeticError("inexact polynomial division");
    return r.divided_by_content(b.lead());
  }
  std::vector<mpz_class> rem = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) throw ArithmeticError("inexact polynomial division");
  std::vector<mpz_class> q(dq + 1);
  const auto& bc = b.coeffs();
  for (int i = dq; i >= 0; --i) {
    mpz_class& top = rem[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      throw ArithmeticError("inexact polynomial division");
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    q[i] = f;
    for (int j = 0; j <= db; ++j) rem[i + j] -= f * bc[j];
  }
  for (const auto& v : rem)
    if (v != 0) throw ArithmeticError("inexact polynomial division");
  return Poly(std::move(q));
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, char var) : s_(s), var_(var) {}

  Poly parse() {
    std::map<int, mpz_class> acc;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      mpz_class coeff = 1;
      bool have_coeff = false;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        coeff = mpz_class(std::string(s_.substr(start, pos_ - start)));
        have_coeff = true;
        skip();
      }
      int degree = 0;
      if (have_coeff && pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip();
        if (pos_ >= s_.size() || peek() != var_) fail("expected variable after '*'");
      }
      if (pos_ < s_.size() && peek() == var_) {
        ++pos_;
        degree = 1;
        skip();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          skip();
          std::size_t start = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
          if (start == pos_) fail("expected exponent");
          degree = std::stoi(std::string(s_.substr(start, pos_ - start)));
        }
      } else if (!have_coeff) {
        fail("expected term");
      }
      acc[degree] += sign * coeff;
    }
    std::vector<mpz_class> c;
    if (!acc.empty()) c.assign(acc.rbegin()->first + 1, mpz_class(0));
    for (auto& [d, v] : acc) c[d] = v;
    return Poly(std::move(c));
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SchemaError("cannot parse polynomial '" + std::string(s_) + "': " + msg);
  }

  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view unparen(std::string_view s) {
  s = strip(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

Poly parse_poly(std::string_view text, char var) { return PolyParser(text, var).parse(); }

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_one()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = poly_div_exact(num_, g);
      den_ = poly_div_exact(den_, g);
    }
    if (den_.lead() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
}

Scalar Scalar::delta() { return Scalar(Poly::monomial(1, 1)); }

Scalar Scalar::delta_pow(int k) {
  thread_local std::map<int, Scalar> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  Scalar s = k >= 0 ? Scalar(Poly::monomial(1, k))
                    : Scalar(Poly(1), Poly::monomial(1, -k), Reduced{});
  cache.emplace(k, s);
  return s;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Reduced{}); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel so the product of reduced fractions stays reduced.
  Poly g1 = poly_gcd(num_, o.den_);
  Poly g2 = poly_gcd(o.num_, den_);
  Poly n1 = g1.is_one() ? num_ : poly_div_exact(num_, g1);
  Poly d2 = g1.is_one() ? o.den_ : poly_div_exact(o.den_, g1);
  Poly n2 = g2.is_one() ? o.num_ : poly_div_exact(o.num_, g2);
  Poly d1 = g2.is_one() ? den_ : poly_div_exact(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero scalar");
  Scalar inv(o.den_, o.num_, Reduced{});
  if (inv.den_.lead() < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this *= inv;
}

double Scalar::evaluate(double x) const {
  double d = den_.evaluate(x);
  if (std::fabs(d) < 1e-12)
    throw PoleError("denominator " + den_.to_string() + " vanishes at d = " + std::to_string(x));
  return num_.evaluate(x) / d;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = strip(text);
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0)
      return Scalar(parse_poly(unparen(s.substr(0, i))), parse_poly(unparen(s.substr(i + 1))));
  }
  return Scalar(parse_poly(unparen(s)));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace tlenv
