// Loop-free oriented-graph value types: Digraph, Tournament, DegreeSequence.
//
// Vertices are dense integers 0..n-1. Adjacency is kept as two n-row bit
// relations (out-neighbours and in-neighbours) that mirror each other, so
// both directions of every query are O(1) mask lookups. At most one arc may
// exist between any vertex pair; digons and loops are rejected at
// construction. All types are immutable after construction and safe to share
// across threads.

#ifndef CONVINV_DIGRAPH_HPP
#define CONVINV_DIGRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "convinv/errors.hpp"

namespace convinv {

using Arc = std::pair<int, int>;

inline constexpr int kMaxOrder = 32;

constexpr std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

constexpr std::uint32_t full_mask(int n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

class Digraph {
 public:
  Digraph() = default;

  // Validates every arc: endpoints in range, no loops, no digons, no repeats.
  static Digraph from_arcs(int order, std::span<const Arc> arcs);
  static Digraph from_arcs(int order, std::initializer_list<Arc> arcs) {
    return from_arcs(order, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int order() const { return n_; }
  int arc_count() const { return arc_count_; }

  bool has_arc(int u, int v) const { return (out_[u] & bit(v)) != 0; }
  bool adjacent(int u, int v) const { return ((out_[u] | in_[u]) & bit(v)) != 0; }

  std::uint32_t out_mask(int v) const { return out_[v]; }
  std::uint32_t in_mask(int v) const { return in_[v]; }

  int out_degree(int v) const { return std::popcount(out_[v]); }
  int in_degree(int v) const { return std::popcount(in_[v]); }
  int degree(int v) const { return out_degree(v) + in_degree(v); }

  // Arcs in lexicographic (from, to) order.
  std::vector<Arc> arcs() const;

  Digraph converse() const;

  // Copy with one extra arc; same validation as from_arcs.
  Digraph with_arc(int u, int v) const;

  // Copy with arc (u,v) replaced by (v,u). Throws ArcAbsent.
  Digraph with_arc_flipped(int u, int v) const;

  // Image under the relabeling perm (perm[old] = new label).
  Digraph relabeled(std::span<const int> perm) const;

  // Subdigraph induced by the vertex set `mask`, vertices renumbered in
  // increasing original order.
  Digraph induced(std::uint32_t mask) const;

  // Labeled equality (same order, identical arc sets).
  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && out_ == other.out_;
  }

  // Partition of the vertex set into weakly connected components.
  std::vector<std::uint32_t> weak_components() const;

  bool weakly_connected() const;

 private:
  void add_arc_unchecked(int u, int v) {
    out_[u] |= bit(v);
    in_[v] |= bit(u);
    ++arc_count_;
  }

  int n_ = 0;
  int arc_count_ = 0;
  std::vector<std::uint32_t> out_;
  std::vector<std::uint32_t> in_;
};

// A Digraph carrying the completeness mark: exactly one arc per vertex pair.
class Tournament {
 public:
  explicit Tournament(Digraph d);

  const Digraph& digraph() const { return d_; }
  int order() const { return d_.order(); }

  bool operator==(const Tournament& other) const { return d_ == other.d_; }

 private:
  Digraph d_;
};

struct DegreeSequence {
  // (out, in) per vertex.
  std::vector<std::pair<int, int>> pairs;
  // Deg(D), Deg+(D), Deg-(D) as sorted multisets.
  std::vector<std::pair<int, int>> multiset;
  std::vector<int> out_multiset;
  std::vector<int> in_multiset;
  int max_degree = 0;      // Delta
  int max_odd_degree = -1; // largest odd value <= Delta; -1 when Delta = 0
  // Engaged when the underlying graph is d-regular with d >= 1; in that case
  // out_degree_counts[i] is the number of vertices with out-degree i
  // (a_{i,d-i}), indices 0..d.
  std::optional<int> regular_degree;
  std::vector<int> out_degree_counts;
};

DegreeSequence degree_sequence(const Digraph& d);

}  // namespace convinv

#endif
