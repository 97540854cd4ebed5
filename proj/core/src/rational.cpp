#include "latgas/rational.hpp"

#include <cctype>
#include <sstream>

namespace latgas {

std::string Rational::to_string() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

bool Rational::parse(const std::string& text, Rational& out) {
  std::string s;
  for (char ch : text)
    if (!std::isspace((unsigned char)ch)) s += ch;
  if (s.empty()) return false;
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t p1 = 0, p2 = 0;
      long long n = std::stoll(s.substr(0, slash), &p1);
      long long d = std::stoll(s.substr(slash + 1), &p2);
      if (p1 != slash || p2 != s.size() - slash - 1) return false;
      out = Rational(n, d);
      return true;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
      if (head.empty() || head == "-" || head == "+") head += "0";
      for (char ch : tail)
        if (!std::isdigit((unsigned char)ch)) return false;
      if (tail.size() > 15) return false;
      std::size_t p = 0;
      long long ip = std::stoll(head, &p);
      if (p != head.size()) return false;
      long long den = 1;
      for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
      long long frac = tail.empty() ? 0 : std::stoll(tail);
      bool neg = (!s.empty() && s[0] == '-');
      long long absip = ip < 0 ? -ip : ip;
      long long num = absip * den + frac;
      out = Rational(neg ? -num : num, den);
      return true;
    }
    std::size_t p = 0;
    long long n = std::stoll(s, &p);
    if (p != s.size()) return false;
    out = Rational(n);
    return true;
  } catch (...) {
    return false;
  }
}

double Polynomial::eval(double rho) const {
  double v = 0;
  for (int k = degree(); k >= 0; --k) v = v * rho + c_[k].to_double();
  return v;
}

Rational Polynomial::eval(const Rational& rho) const {
  Rational v(0);
  for (int k = degree(); k >= 0; --k) v = v * rho + c_[k];
  return v;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (int k = 1; k < (int)c_.size(); ++k) d.push_back(Rational(k) * c_[k]);
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff((int)k) + q.coeff((int)k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff((int)k) - q.coeff((int)k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Rational> c(p.c_.size() + q.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c(p.c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * p.c_[k];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < (int)c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    Rational v = c_[k];
    bool neg = v < Rational(0);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational av = neg ? -v : v;
    bool unit = (av == Rational(1));
    if (k == 0 || !unit) os << av.to_string();
    if (k > 0) {
      if (!unit) os << "*";
      os << "rho";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace latgas
