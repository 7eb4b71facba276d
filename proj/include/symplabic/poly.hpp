#ifndef SYMPLABIC_POLY_HPP
#define SYMPLABIC_POLY_HPP

#include "symplabic/rational.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace symplabic {

// Exponents may be negative: weights produced by gauge fixing are Laurent.
using Monomial = std::map<std::string, int>;

inline Monomial operator*(Monomial a, const Monomial &b)
{
  for (auto const &[v, e] : b) {
    int s = (a[v] += e);
    if (s == 0)
      a.erase(v);
  }
  return a;
}

inline Monomial inverse(Monomial m)
{
  for (auto &[v, e] : m)
    e = -e;
  return m;
}

class Poly {
public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}
  Poly(const Rational &c)
  {
    if (c != 0)
      terms_[Monomial{}] = c;
  }
  Poly(const Monomial &m, const Rational &c)
  {
    if (c != 0)
      terms_[m] = c;
  }

  static Poly var(const std::string &name, int e = 1)
  {
    return Poly(Monomial{{name, e}}, 1);
  }

  std::map<Monomial, Rational> const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const
  {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rational constant() const
  {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool is_term() const { return terms_.size() == 1; }

  std::set<std::string> variables() const
  {
    std::set<std::string> vs;
    for (auto const &[m, c] : terms_)
      for (auto const &[v, e] : m)
        vs.insert(v);
    return vs;
  }

  Poly &operator+=(const Poly &o)
  {
    for (auto const &[m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  Poly &operator-=(const Poly &o)
  {
    for (auto const &[m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }
  Poly &operator*=(const Poly &o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator-(Poly a)
  {
    for (auto &[m, c] : a.terms_)
      c = -c;
    return a;
  }
  friend Poly operator*(const Poly &a, const Poly &b)
  {
    Poly r;
    for (auto const &[ma, ca] : a.terms_)
      for (auto const &[mb, cb] : b.terms_)
        r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const Poly &a, const Poly &b) { return a.terms_ == b.terms_; }

  // Exact division by a single nonzero term.
  Poly divided_by_term(const Poly &t) const
  {
    if (!t.is_term())
      throw std::domain_error("division by a non-monomial polynomial");
    auto const &[m, c] = *t.terms_.begin();
    Poly r;
    Monomial mi = inverse(m);
    for (auto const &[mm, cc] : terms_)
      r.terms_[mm * mi] = cc / c;
    return r;
  }

  Rational evaluate(const std::map<std::string, Rational> &at) const
  {
    Rational s = 0;
    for (auto const &[m, c] : terms_) {
      Rational p = c;
      for (auto const &[v, e] : m) {
        auto it = at.find(v);
        if (it == at.end())
          throw std::invalid_argument("no value for variable " + v);
        if (e < 0 && it->second == 0)
          throw std::domain_error("negative power of zero");
        for (int i = 0; i < (e < 0 ? -e : e); ++i)
          p = e < 0 ? p / it->second : p * it->second;
      }
      s += p;
    }
    return s;
  }

  Poly substitute(const std::map<std::string, Poly> &at) const;

  // Rational content: gcd of numerators over lcm of denominators, signed so
  // that the leading coefficient of the quotient is positive.
  Rational content() const
  {
    if (terms_.empty())
      return 1;
    Integer g = 0, l = 1;
    for (auto const &[m, c] : terms_) {
      g = gcd(g, numerator(c));
      l = lcm(l, denominator(c));
    }
    Rational r(g, l);
    if (terms_.begin()->second < 0)
      r = -r;
    return r;
  }

  std::string str() const
  {
    if (terms_.empty())
      return "0";
    std::string out;
    bool first = true;
    for (auto const &[m, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0)
          a = -a;
      }
      first = false;
      std::string mon;
      for (auto const &[v, e] : m) {
        if (!mon.empty())
          mon += "*";
        mon += v;
        if (e != 1)
          mon += "^" + std::to_string(e);
      }
      if (mon.empty())
        out += to_string(a);
      else if (a == 1)
        out += mon;
      else
        out += to_string(a) + "*" + mon;
    }
    return out;
  }

private:
  void add_term(const Monomial &m, const Rational &c)
  {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

inline Poly pow(const Poly &p, int e)
{
  if (e < 0) {
    if (!p.is_term())
      throw std::domain_error("negative power of a non-monomial");
    return Poly(1).divided_by_term(pow(p, -e));
  }
  Poly r(1);
  for (int i = 0; i < e; ++i)
    r *= p;
  return r;
}

inline Poly Poly::substitute(const std::map<std::string, Poly> &at) const
{
  Poly s;
  for (auto const &[m, c] : terms_) {
    Poly p(c);
    for (auto const &[v, e] : m) {
      auto it = at.find(v);
      p *= pow(it == at.end() ? Poly::var(v) : it->second, e);
    }
    s += p;
  }
  return s;
}

// Quotient of polynomials; equality is decided by cross multiplication.
class RationalFunction {
public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}
  RationalFunction(const Rational &c) : num_(c), den_(1) {}
  RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}
  RationalFunction(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d))
  {
    if (den_.is_zero())
      throw std::domain_error("zero denominator");
    tidy();
  }

  Poly const &num() const { return num_; }
  Poly const &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b)
  {
    if (a.den_ == b.den_)
      return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction &a)
  {
    return {-a.num_, a.den_};
  }
  friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b)
  {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b)
  {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b)
  {
    if (b.is_zero())
      throw std::domain_error("division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction &operator+=(const RationalFunction &o) { return *this = *this + o; }
  RationalFunction &operator*=(const RationalFunction &o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction &a, const RationalFunction &b)
  {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const
  {
    if (den_ == Poly(1))
      return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

private:
  void tidy()
  {
    if (num_.is_zero()) {
      den_ = Poly(1);
    } else if (den_.is_term()) {
      num_ = num_.divided_by_term(den_);
      den_ = Poly(1);
    }
  }

  Poly num_, den_;
};

// Small expression parser: numbers, identifiers, + - * / ^ and parentheses.
// Division is allowed only by single terms so the result stays a Laurent
// polynomial.
namespace detail {
class PolyParser {
public:
  explicit PolyParser(const std::string &s) : s_(s) {}
  Poly parse()
  {
    Poly p = expr();
    skip();
    if (pos_ != s_.size())
      fail();
    return p;
  }

private:
  [[noreturn]] void fail() const
  {
    throw std::invalid_argument("cannot parse polynomial: " + s_);
  }
  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c)
  {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr()
  {
    Poly p;
    bool neg = eat('-');
    if (!neg)
      eat('+');
    p = term();
    if (neg)
      p = -p;
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }
  Poly term()
  {
    Poly p = power();
    for (;;) {
      if (eat('*'))
        p *= power();
      else if (eat('/'))
        p = p.divided_by_term(power());
      else
        return p;
    }
  }
  Poly power()
  {
    Poly b = atom();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (st == pos_)
        fail();
      int e = std::stoi(s_.substr(st, pos_ - st));
      b = pow(b, neg ? -e : e);
    }
    return b;
  }
  Poly atom()
  {
    skip();
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')'))
        fail();
      return p;
    }
    if (pos_ >= s_.size())
      fail();
    char c = s_[pos_];
    std::size_t st = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return Poly(Rational(Integer(s_.substr(st, pos_ - st))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Poly::var(s_.substr(st, pos_ - st));
    }
    fail();
  }

  std::string s_;
  std::size_t pos_ = 0;
};
} // namespace detail

inline Poly parse_poly(const std::string &s)
{
  return detail::PolyParser(s).parse();
}

} // namespace symplabic

#endif
