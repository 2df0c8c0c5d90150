// Simple undirected graphs: the carrier for orientation families (paths,
// cycles, stars, double stars, trees) and for girth/diameter queries.

#ifndef CONVINV_GRAPH_HPP
#define CONVINV_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "convinv/digraph.hpp"

namespace convinv {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool adjacent(int u, int v) const { return (adj_[u] & bit(v)) != 0; }
  std::uint32_t adj_mask(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int max_degree() const;

  // Edges as (u, v) with u < v, lexicographic order.
  std::vector<Edge> edges() const;

  bool connected() const;
  bool is_tree() const;
  bool is_path() const;

  // Length of a shortest cycle; nullopt for forests.
  std::optional<int> girth() const;

  // Greatest pairwise distance; nullopt when disconnected or order 0.
  std::optional<int> diameter() const;

  std::vector<int> leaves() const;

  // Named families.
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph star(int leaf_count);
  // Two adjacent centers with `a` and `b` pendant leaves.
  static Graph double_star(int a, int b);

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint32_t> adj_;
};

// Forgets arc directions. The result has an edge wherever the digraph has an
// arc in either direction.
Graph underlying_graph(const Digraph& d);

}  // namespace convinv

#endif
