#include "convinv/graph.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace convinv {

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  if (order < 0 || order > kMaxOrder)
    throw Error(Errc::out_of_range,
                "order " + std::to_string(order) + " outside [0, " + std::to_string(kMaxOrder) + "]");
  Graph g;
  g.n_ = order;
  g.adj_.assign(static_cast<std::size_t>(order), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= order || v < 0 || v >= order)
      throw Error(Errc::out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") on " +
                      std::to_string(order) + " vertices");
    if (u == v) throw Error(Errc::loop_arc, "loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v))
      throw Error(Errc::out_of_range,
                  "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
    ++g.edge_count_;
  }
  return g;
}

int Graph::max_degree() const {
  int result = 0;
  for (int v = 0; v < n_; ++v) result = std::max(result, degree(v));
  return result;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) {
    std::uint32_t m = adj_[u] & ~(full_mask(u + 1));
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      result.emplace_back(u, v);
    }
  }
  return result;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::uint32_t comp = bit(0), frontier = comp;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint32_t nbrs = adj_[v] & ~comp;
    comp |= nbrs;
    frontier |= nbrs;
  }
  return comp == full_mask(n_);
}

bool Graph::is_tree() const {
  return n_ >= 1 && edge_count_ == n_ - 1 && connected();
}

bool Graph::is_path() const {
  return is_tree() && max_degree() <= 2;
}

std::optional<int> Graph::girth() const {
  // BFS from every vertex; a non-tree edge closing at depths d1, d2 witnesses
  // a cycle of length d1 + d2 + 1 through the root.
  int best = -1;
  for (int s = 0; s < n_; ++s) {
    std::array<int, kMaxOrder> dist{};
    std::array<int, kMaxOrder> parent{};
    dist.fill(-1);
    parent.fill(-1);
    std::array<int, kMaxOrder> queue{};
    int head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      int v = queue[head++];
      std::uint32_t m = adj_[v];
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue[tail++] = w;
        } else if (w != parent[v]) {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<int> Graph::diameter() const {
  if (n_ == 0 || !connected()) return std::nullopt;
  int best = 0;
  for (int s = 0; s < n_; ++s) {
    std::array<int, kMaxOrder> dist{};
    dist.fill(-1);
    std::array<int, kMaxOrder> queue{};
    int head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      int v = queue[head++];
      best = std::max(best, dist[v]);
      std::uint32_t m = adj_[v];
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return best;
}

std::vector<int> Graph::leaves() const {
  std::vector<int> result;
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 1) result.push_back(v);
  return result;
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw Error(Errc::out_of_range, "cycle needs order >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return from_edges(n, e);
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_edges(n, e);
}

Graph Graph::star(int leaf_count) {
  if (leaf_count < 0) throw Error(Errc::out_of_range, "negative leaf count");
  std::vector<Edge> e;
  for (int i = 1; i <= leaf_count; ++i) e.emplace_back(0, i);
  return from_edges(leaf_count + 1, e);
}

Graph Graph::double_star(int a, int b) {
  if (a < 1 || b < 1)
    throw Error(Errc::out_of_range, "double star needs a pendant leaf on each center");
  std::vector<Edge> e;
  e.emplace_back(0, 1);
  int next = 2;
  for (int i = 0; i < a; ++i) e.emplace_back(0, next++);
  for (int i = 0; i < b; ++i) e.emplace_back(1, next++);
  return from_edges(next, e);
}

Graph underlying_graph(const Digraph& d) {
  std::vector<Edge> e;
  for (auto [u, v] : d.arcs()) e.emplace_back(std::min(u, v), std::max(u, v));
  return Graph::from_edges(d.order(), e);
}

}  // namespace convinv
