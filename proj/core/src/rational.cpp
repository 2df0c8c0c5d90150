#include "convinv/rational.hpp"

#include "convinv/errors.hpp"

namespace convinv {

BigRat parse_rational(const std::string& text) {
  auto fail = [&]() -> Error { return Error(Errc::usage_error, "bad rational '" + text + "'"); };
  if (text.empty()) throw fail();
  std::string s = text;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw fail();
  auto digits = [&](const std::string& part) {
    if (part.empty()) throw fail();
    for (char c : part)
      if (c < '0' || c > '9') throw fail();
    return BigInt(part);
  };
  BigRat value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    BigInt num = digits(s.substr(0, slash));
    BigInt den = digits(s.substr(slash + 1));
    if (den == 0) throw fail();
    value = BigRat(num, den);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if (whole.empty()) whole = "0";
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = BigRat(digits(whole) * scale + (frac.empty() ? BigInt(0) : digits(frac)), scale);
  } else {
    value = BigRat(digits(s));
  }
  return negative ? -value : value;
}

}  // namespace convinv
