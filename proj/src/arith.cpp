#include "kisin/arith.hpp"

namespace kisin {

Integer floor(const Rational &r) {
  Integer num = numerator(r);
  Integer den = denominator(r); // always positive
  Integer q = num / den;        // truncates toward zero
  if (num < 0 && q * den != num)
    q -= 1;
  return q;
}

std::string to_string(const Integer &z) { return z.str(); }

std::string to_string(const Rational &r) {
  if (is_integral(r))
    return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string &text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos)
      return Rational(Integer(text));
    Integer den(text.substr(slash + 1));
    if (den == 0)
      throw InvalidInput("zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error &) {
    throw InvalidInput("malformed rational '" + text + "'");
  }
}

bool is_prime(long long p) {
  if (p < 2)
    return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

Integer ipow(const Integer &base, unsigned exponent) {
  Integer result = 1;
  for (unsigned i = 0; i < exponent; ++i)
    result *= base;
  return result;
}

} // namespace kisin
