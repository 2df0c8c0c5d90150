// Named digraphs shared across test files.

#ifndef CONVINV_TEST_FIXTURES_HPP
#define CONVINV_TEST_FIXTURES_HPP

#include "convinv/digraph.hpp"

namespace convinv::fixture {

inline Digraph single_arc() { return Digraph::from_arcs(2, {{0, 1}}); }

inline Digraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
  return Digraph::from_arcs(n, arcs);
}

inline Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
  arcs.emplace_back(n - 1, 0);
  return Digraph::from_arcs(n, arcs);
}

inline Digraph cyclic_triangle() { return directed_cycle(3); }

// x -> u, u' -> u, u -> v, y -> v, v' -> v on x=0, u=1, v=2, y=3, u'=4, v'=5.
inline Digraph mirrored_in_star() {
  return Digraph::from_arcs(6, {{0, 1}, {4, 1}, {1, 2}, {3, 2}, {5, 2}});
}

// The 5-vertex digraph with a vertex-transitive non-adjacent pair {u, v}:
// x -> u, u' -> u, x -> v, v' -> v on x=0, u=1, v=2, u'=3, v'=4.
inline Digraph transitive_pair_example() {
  return Digraph::from_arcs(5, {{0, 1}, {3, 1}, {0, 2}, {4, 2}});
}

inline Digraph two_disjoint_arcs() { return Digraph::from_arcs(4, {{0, 1}, {2, 3}}); }

}  // namespace convinv::fixture

#endif
