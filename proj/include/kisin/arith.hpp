#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kisin {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error hierarchy. The CLI maps these onto exit codes 2, 3 and 4.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

inline Integer numerator(const Rational &r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator(const Rational &r) {
  return boost::multiprecision::denominator(r);
}
inline bool is_integral(const Rational &r) { return denominator(r) == 1; }

/// Largest integer not exceeding r.
Integer floor(const Rational &r);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational &r);
std::string to_string(const Integer &z);
Rational parse_rational(const std::string &text);

bool is_prime(long long p);
Integer ipow(const Integer &base, unsigned exponent);

} // namespace kisin
