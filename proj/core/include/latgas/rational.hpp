#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace latgas {

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates. Throws on overflow rather than silently wrapping; the
// quantities handled here (rate tables, dual coefficients, small binomials)
// stay far below the limit.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return double(num_) / double(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                             i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational::from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                             i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational::from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  std::string to_string() const;

  // Parses "p", "-p", "p/q" or a finite decimal like "0.25" exactly.
  static bool parse(const std::string& text, Rational& out);

 private:
  using i128 = __int128;
  long long num_, den_;

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(std::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  static Rational from128(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rational overflow");
    Rational r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    if (r.den_ == 0) throw std::domain_error("Rational: zero denominator");
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a ? a : 1;
  }
};

// Element of Q(sqrt(chi)) for rational chi: a + b*sqrt(chi). Closed under the
// dual-basis algebra at rational density (eta_x = rho + sqrt(chi) heta_x,
// kappa = (1-2 rho)/sqrt(chi) = (1-2 rho) sqrt(chi)/chi).
struct QSqrtChi {
  Rational a, b;   // value = a + b*sqrt(chi)
  Rational chi;    // carried along; all operands must agree

  QSqrtChi() = default;
  QSqrtChi(Rational a_, Rational b_, Rational chi_) : a(a_), b(b_), chi(chi_) {}
  static QSqrtChi constant(Rational v, Rational chi) { return {v, Rational(0), chi}; }
  static QSqrtChi sqrt_chi(Rational chi) { return {Rational(0), Rational(1), chi}; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  double to_double() const { return a.to_double() + b.to_double() * std::sqrt(chi.to_double()); }

  friend QSqrtChi operator+(const QSqrtChi& x, const QSqrtChi& y) {
    return {x.a + y.a, x.b + y.b, x.chi};
  }
  friend QSqrtChi operator-(const QSqrtChi& x, const QSqrtChi& y) {
    return {x.a - y.a, x.b - y.b, x.chi};
  }
  friend QSqrtChi operator*(const QSqrtChi& x, const QSqrtChi& y) {
    return {x.a * y.a + x.b * y.b * x.chi, x.a * y.b + x.b * y.a, x.chi};
  }
  QSqrtChi operator-() const { return {-a, -b, chi}; }
  QSqrtChi& operator+=(const QSqrtChi& y) { return *this = *this + y; }
  QSqrtChi& operator-=(const QSqrtChi& y) { return *this = *this - y; }
  friend bool operator==(const QSqrtChi& x, const QSqrtChi& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const QSqrtChi& x, const QSqrtChi& y) { return !(x == y); }
};

// Dense polynomial with rational coefficients, coeffs[k] multiplying rho^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const {
    return (k >= 0 && k < (int)c_.size()) ? c_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  double eval(double rho) const;
  Rational eval(const Rational& rho) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

  std::string to_string() const;  // e.g. "rho - 3*rho^2 + 2*rho^3"

 private:
  std::vector<Rational> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

}  // namespace latgas
