#include "convinv/polynomial.hpp"

#include <array>

namespace convinv {

namespace {

// Binomial table up to the maximum supported degree.
constexpr int kBinomialRows = kMaxOrder + 1;

const std::array<std::array<long long, kBinomialRows>, kBinomialRows>& binomials() {
  static const auto table = [] {
    std::array<std::array<long long, kBinomialRows>, kBinomialRows> t{};
    for (int n = 0; n < kBinomialRows; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomials()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<long long> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial IntPolynomial::constant(long long value) {
  return IntPolynomial(std::vector<long long>{value});
}

bool IntPolynomial::is_even() const {
  for (int t = 1; t <= degree(); t += 2)
    if (coefficient(t) != 0) return false;
  return true;
}

long long IntPolynomial::evaluate(long long x) const {
  long long result = 0;
  for (int t = degree(); t >= 0; --t) result = result * x + coefficient(t);
  return result;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<long long> sum(std::max(coefficients_.size(), other.coefficients_.size()), 0);
  for (std::size_t i = 0; i < sum.size(); ++i)
    sum[i] = coefficient(static_cast<int>(i)) + other.coefficient(static_cast<int>(i));
  return IntPolynomial(std::move(sum));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (coefficients_.empty() || other.coefficients_.empty()) return {};
  std::vector<long long> product(coefficients_.size() + other.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
      product[i + j] += coefficients_[i] * other.coefficients_[j];
  return IntPolynomial(std::move(product));
}

std::string IntPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (int t = 0; t <= degree(); ++t) {
    long long c = coefficient(t);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long long mag = c < 0 ? -c : c;
    if (mag != 1 || t == 0) out += std::to_string(mag);
    if (t >= 1) out += "x";
    if (t >= 2) out += "^" + std::to_string(t);
  }
  return out;
}

IntPolynomial degree_polynomial(const Digraph& d) {
  IntPolynomial total;
  const IntPolynomial plus(std::vector<long long>{1, 1});
  const IntPolynomial minus(std::vector<long long>{1, -1});
  for (int v = 0; v < d.order(); ++v) {
    IntPolynomial term = IntPolynomial::constant(1);
    for (int k = 0; k < d.out_degree(v); ++k) term = term * plus;
    for (int k = 0; k < d.in_degree(v); ++k) term = term * minus;
    total = total + term;
  }
  return total;
}

long long coefficient_closed_form(const Digraph& d, int t) {
  if (t < 0) throw Error(Errc::index_out_of_range, "negative power");
  long long total = 0;
  for (int v = 0; v < d.order(); ++v) {
    const int out = d.out_degree(v), in = d.in_degree(v);
    for (int i = 0; i <= t; ++i) {
      long long term = binomial(out, i) * binomial(in, t - i);
      total += (t - i) % 2 == 0 ? term : -term;
    }
  }
  return total;
}

bool odd_coefficients_vanish(const Digraph& d) {
  return degree_polynomial(d).is_even();
}

bool source_sink_balance(const Digraph& d) {
  long long source_sum = 0, sink_sum = 0;
  for (int v = 0; v < d.order(); ++v) {
    if (d.in_degree(v) == 0) source_sum += 1ll << d.out_degree(v);
    if (d.out_degree(v) == 0) sink_sum += 1ll << d.in_degree(v);
  }
  return source_sum == sink_sum;
}

bool c3_identity_holds(const Digraph& d) {
  long long lhs = 0, rhs = 0;
  for (int v = 0; v < d.order(); ++v) {
    const long long out = d.out_degree(v), in = d.in_degree(v);
    const long long diff = out - in;
    lhs += diff * diff * diff;
    rhs += out * out - in * in;
  }
  return lhs == 3 * rhs;
}

TopOddChecks top_odd_checks(const Digraph& d) {
  const DegreeSequence seq = degree_sequence(d);
  if (seq.max_degree == 0) throw Error(Errc::degree_zero, "digraph has no arcs");
  TopOddChecks checks;
  const int delta = seq.max_degree;
  long long max_vertices = 0;
  long long leading_sum = 0;   // sum over d(v) = Delta_o of (-1)^indeg
  long long even_case_sum = 0; // Delta even: contribution of d(v) = Delta vertices
  for (auto [out, in] : seq.pairs) {
    const int deg = out + in;
    const long long sign = in % 2 == 0 ? 1 : -1;
    if (deg == delta) ++max_vertices;
    if (delta % 2 == 0) {
      if (deg == delta) even_case_sum += sign * out - sign * in;
      if (deg == delta - 1) leading_sum += sign;
    } else if (deg == delta) {
      leading_sum += sign;
    }
  }
  if (delta % 2 == 0)
    checks.even_max_case = even_case_sum + leading_sum == 0;
  else
    checks.odd_max_case = leading_sum == 0;
  checks.parity_obstruction = delta % 2 == 1 && delta >= 3 && max_vertices % 2 == 1;
  return checks;
}

bool regular_converse_degree_check(const Digraph& d) {
  const DegreeSequence seq = degree_sequence(d);
  if (!seq.regular_degree)
    throw Error(Errc::not_regular, "underlying graph is not d-regular with d >= 1");
  const int reg = *seq.regular_degree;
  for (int i = 0; i <= reg; ++i)
    if (seq.out_degree_counts[static_cast<std::size_t>(i)] !=
        seq.out_degree_counts[static_cast<std::size_t>(reg - i)])
      return false;
  return true;
}

}  // namespace convinv
