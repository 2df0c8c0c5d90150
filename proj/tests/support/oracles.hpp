// Brute-force test oracles. Everything here works by exhaustive enumeration
// (all permutations, all labeled tournaments, all arc assignments) and stays
// independent of the library's search-based implementations.

#ifndef CONVINV_TEST_ORACLES_HPP
#define CONVINV_TEST_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "convinv/digraph.hpp"
#include "convinv/rational.hpp"

namespace convinv::oracle {

// All n! vertex bijections.
std::vector<std::vector<int>> all_permutations(int n);

bool brute_isomorphic(const Digraph& a, const Digraph& b);

std::uint64_t brute_automorphism_count(const Digraph& d);

// Injective arc-preserving maps counted by plain enumeration of all
// injections.
std::uint64_t naive_ism(const Digraph& d, const Digraph& host);

// All 2^(n(n-1)/2) labeled tournaments on n vertices.
std::vector<Tournament> all_labeled_tournaments(int n);

// Number of tournament isomorphism classes on n vertices, grouped by
// pairwise permutation search.
std::size_t tournament_class_count_by_brute_force(int n);

// One representative per orgraph isomorphism class on n vertices
// (3^(n(n-1)/2) assignments filtered by canonical key).
std::vector<Digraph> nonisomorphic_orgraphs(int n);

// Exact E(ism(D, T_p)) by enumerating the full finite probability space:
// every labeled base tournament on |D|-1 vertices (uniform) and every
// extension arc pattern (weighted by the bias).
BigRat exact_expected_ism(const Digraph& d, const BigRat& bias);

}  // namespace convinv::oracle

#endif
