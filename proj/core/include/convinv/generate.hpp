// Generators: tournaments (exhaustive non-isomorphic catalogues, named
// constructions, random models) and orientation families of graphs.

#ifndef CONVINV_GENERATE_HPP
#define CONVINV_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "convinv/digraph.hpp"
#include "convinv/graph.hpp"
#include "convinv/rational.hpp"
#include "convinv/rng.hpp"

namespace convinv {

inline constexpr int kDefaultTournamentCap = 8;
inline constexpr int kDefaultEdgeCap = 20;

// One representative per isomorphism class, each relabeled to canonical form,
// sorted by canonical key. Orders <= 6 enumerate all labeled tournaments and
// filter; 7 and 8 extend the previous catalogue vertex by vertex. Results are
// cached per order and shared, so the returned reference stays valid.
const std::vector<Tournament>& nonisomorphic_tournaments(int n, int order_cap = kDefaultTournamentCap);

// Arcs exactly {(i,j): i < j}.
Tournament transitive_tournament(int n);

// Rotational tournament: i beats the next floor((n-1)/2) vertices cyclically;
// for even n the diametrically opposite pairs are oriented i -> i + n/2 for
// i < n/2. Strong for every n >= 3.
Tournament circulant_tournament(int n);

Tournament flip_arc(const Tournament& t, int u, int v);

// Disjoint union with every arc oriented from t0's vertices to t1's.
Tournament compose_dominant(const Tournament& t0, const Tournament& t1);

struct RandomModel {
  int base_order = 0;          // |T|, the order before extension
  BigRat bias = BigRat(0);     // p in [-1/2, 1/2]
  std::uint64_t seed = kDefaultSeed;
};

// Orientation of each pair chosen by an independent fair coin.
Tournament random_tournament(int n, std::uint64_t seed);

// New vertex v* = |T| with arc v* -> v present independently with probability
// 1/2 + bias per original vertex.
Tournament random_extension(const Tournament& t, const RandomModel& model);

enum class OrientationMode { labeled, up_to_isomorphism };

// Every orientation of G: 2^(edge count) digraphs in labeled mode, one per
// isomorphism class otherwise.
std::vector<Digraph> all_orientations(const Graph& g, OrientationMode mode,
                                      int edge_cap = kDefaultEdgeCap);

// Orientation of the star K_{1,d} whose center (vertex 0) has out-degree i.
Digraph star_orientation(int d, int i);

// Double star on centers u = 0, v = 1 with the arc (u, v) and pendant leaves
// realizing the requested degree pairs (out_u, in_u) and (out_v, in_v).
Digraph double_star_orientation(int out_u, int in_u, int out_v, int in_v);

// The 6-vertex converse-invariant double star that is not self-converse:
// centers (1,2) and (0,3), four pendant sources.
Digraph invariant_double_star();

// All arcs directed away from root; root becomes the unique source.
Digraph orient_out_branching(const Graph& g, int root);

// Reorders vertices so a shortest cycle (lexicographically least vertex set,
// traversed from its least vertex toward its least neighbour) comes first as
// a directed cycle; every other edge is oriented from lower to higher index.
// Returns the orientation together with the girth.
struct CycleOrientation {
  Digraph orientation;
  int girth = 0;
};
CycleOrientation orient_with_cycle(const Graph& g);

}  // namespace convinv

#endif
