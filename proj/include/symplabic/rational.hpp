#ifndef SYMPLABIC_RATIONAL_HPP
#define SYMPLABIC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace symplabic {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                              boost::multiprecision::et_off>;

inline std::string to_string(const Rational &q)
{
  if (denominator(q) == 1)
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p", "-p" or "p/q".
inline Rational parse_rational(const std::string &s)
{
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(Integer(s));
    Integer p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0)
      throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error &) {
    throw std::invalid_argument("not a rational number: " + s);
  }
}

} // namespace symplabic

#endif
