// Exact arithmetic aliases used by the expectation formula and its tests.

#ifndef CONVINV_RATIONAL_HPP
#define CONVINV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

namespace convinv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

inline BigRat rat_pow(const BigRat& base, int exponent) {
  BigRat result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline double to_double(const BigRat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const BigRat& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

// Parses "p/q", an integer, or a decimal string ("-0.3" -> -3/10), exactly.
BigRat parse_rational(const std::string& text);

}  // namespace convinv

#endif
