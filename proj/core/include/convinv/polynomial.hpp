// The degree polynomial P_D(x) = sum_v (1+x)^outdeg(v) (1-x)^indeg(v), its
// coefficients, and the necessary-condition predicates for converse
// invariance derived from it. All arithmetic is exact.

#ifndef CONVINV_POLYNOMIAL_HPP
#define CONVINV_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "convinv/digraph.hpp"

namespace convinv {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coefficients);
  static IntPolynomial constant(long long value);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  long long coefficient(int power) const {
    return power >= 0 && power < static_cast<int>(coefficients_.size())
               ? coefficients_[static_cast<std::size_t>(power)]
               : 0;
  }

  bool is_even() const;

  long long evaluate(long long x) const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  bool operator==(const IntPolynomial& other) const { return coefficients_ == other.coefficients_; }

  // Sparse ascending terms, e.g. "6 + 2x^2"; zero polynomial prints "0".
  std::string to_string() const;

 private:
  std::vector<long long> coefficients_;  // index = power, trailing zeros trimmed
};

IntPolynomial degree_polynomial(const Digraph& d);

// Coefficient of x^t in P_D via the binomial closed form
// sum_v sum_i C(out(v), i) C(in(v), t-i) (-1)^(t-i).
long long coefficient_closed_form(const Digraph& d, int t);

// c_t(D) = 0 for every odd t <= Delta_o(D); equivalent to P_D = P_{-D} and to
// P_D being even. Vacuously true for arcless digraphs.
bool odd_coefficients_vanish(const Digraph& d);

// sum over sources of 2^outdeg equals sum over sinks of 2^indeg
// (the x = 1 evaluation of P_D = P_{-D}).
bool source_sink_balance(const Digraph& d);

// sum_v (out-in)^3 == 3 sum_v (out^2 - in^2); equivalent to c_3(D) = 0.
bool c3_identity_holds(const Digraph& d);

struct TopOddChecks {
  // Engaged when the maximum degree is even: the leading-odd-coefficient
  // identity for c_{Delta-1}; true = satisfied.
  std::optional<bool> even_max_case;
  // Engaged when the maximum degree is odd: sum over max-degree vertices of
  // (-1)^indeg vanishes; true = satisfied.
  std::optional<bool> odd_max_case;
  // True iff the maximum degree is odd, >= 3, and an odd number of vertices
  // attain it; this forces the odd case to fail and certifies that some
  // tournament distinguishes D from its converse.
  bool parity_obstruction = false;
};

// Throws DegreeZero when the digraph has no arcs.
TopOddChecks top_odd_checks(const Digraph& d);

// For orientations of d-regular graphs (d >= 1): true iff Deg(D) = Deg(-D)
// as multisets. Throws NotRegular otherwise.
bool regular_converse_degree_check(const Digraph& d);

}  // namespace convinv

#endif
