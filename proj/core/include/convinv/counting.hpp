// Embedding counting: ism(D, H), rooted variants, aut-normalized copy counts
// f_T(D), the exact expectation of ism(D, T_p) under the biased one-vertex
// extension model, and its Monte Carlo estimator.
//
// A copy of D in T is a subdigraph of T isomorphic to D: embeddings preserve
// the arcs of D but extra arcs of T among image vertices are ignored
// (non-induced semantics).

#ifndef CONVINV_COUNTING_HPP
#define CONVINV_COUNTING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "convinv/digraph.hpp"
#include "convinv/rational.hpp"

namespace convinv {

inline constexpr int kDefaultPatternCap = 9;

// Number of injective arc-preserving maps from d into host. Zero when
// |d| > |host|; the cap applies to the pattern only.
std::uint64_t ism(const Digraph& d, const Digraph& host, int pattern_cap = kDefaultPatternCap);

// As ism, restricted to maps sending u to v.
std::uint64_t ism_rooted(const Digraph& d, int u, const Digraph& host, int v,
                         int pattern_cap = kDefaultPatternCap);

struct CountReport {
  std::uint64_t ism = 0;
  std::uint64_t aut = 1;
  std::uint64_t copies = 0;  // ism / aut, exact
  // (pattern vertex, host vertex) -> rooted ism; each pattern vertex's row
  // sums to ism.
  std::optional<std::map<std::pair<int, int>, std::uint64_t>> rooted;
};

CountReport copies(const Digraph& d, const Tournament& t, bool with_rooted = false,
                   int pattern_cap = kDefaultPatternCap);

// Exact value of (|D|-1)! 2^-||D|| sum_u (1+2p)^d+(u) (1-2p)^d-(u),
// the expectation of ism(D, T_p) over the biased extension model.
BigRat expected_ism_formula(const Digraph& d, const BigRat& bias);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

// Empirical mean of ism(D, T_p) over seeded samples. Each sample draws its
// own child stream, so the estimate is independent of any worker layout.
McEstimate mc_expected_ism(const Digraph& d, const BigRat& bias, std::uint64_t samples,
                           std::uint64_t seed);

}  // namespace convinv

#endif
