#include "convinv/generate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "convinv/canonical.hpp"
#include "convinv/rng.hpp"

namespace convinv {

namespace {

// All 2^(n(n-1)/2) labeled tournaments, deduplicated by canonical key.
std::vector<Tournament> enumerate_by_filter(int n) {
  std::vector<Arc> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::map<std::vector<std::uint8_t>, Tournament> classes;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Arc> arcs(pairs.size());
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t k = 0; k < pairs.size(); ++k)
      arcs[k] = (mask >> k) & 1 ? Arc{pairs[k].second, pairs[k].first} : pairs[k];
    Digraph d = Digraph::from_arcs(n, arcs);
    auto form = canonical_form(d);
    classes.emplace(form.key, Tournament(d.relabeled(form.relabeling)));
  }
  std::vector<Tournament> result;
  result.reserve(classes.size());
  for (auto& [key, t] : classes) result.push_back(std::move(t));
  return result;
}

// Extend every class of order n-1 by a new vertex in all 2^(n-1) ways and
// deduplicate; complete because deleting a vertex of any order-n tournament
// lands in the order-(n-1) catalogue.
std::vector<Tournament> enumerate_by_extension(const std::vector<Tournament>& smaller, int n) {
  std::map<std::vector<std::uint8_t>, Tournament> classes;
  for (const Tournament& t : smaller) {
    std::vector<Arc> arcs = t.digraph().arcs();
    const std::size_t base = arcs.size();
    arcs.resize(base + static_cast<std::size_t>(n - 1));
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      for (int v = 0; v < n - 1; ++v)
        arcs[base + static_cast<std::size_t>(v)] = (mask >> v) & 1 ? Arc{n - 1, v} : Arc{v, n - 1};
      Digraph d = Digraph::from_arcs(n, arcs);
      auto form = canonical_form(d);
      classes.emplace(form.key, Tournament(d.relabeled(form.relabeling)));
    }
  }
  std::vector<Tournament> result;
  result.reserve(classes.size());
  for (auto& [key, t] : classes) result.push_back(std::move(t));
  return result;
}

}  // namespace

const std::vector<Tournament>& nonisomorphic_tournaments(int n, int order_cap) {
  if (n < 0 || n > order_cap)
    throw Error(Errc::order_cap_exceeded,
                "tournament catalogue order " + std::to_string(n) + " > cap " + std::to_string(order_cap));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<Tournament>>> cache;
  std::scoped_lock lock(mutex);
  std::function<const std::vector<Tournament>&(int)> get =
      [&](int k) -> const std::vector<Tournament>& {
    auto it = cache.find(k);
    if (it != cache.end()) return *it->second;
    auto built = std::make_unique<std::vector<Tournament>>(
        k <= 6 ? enumerate_by_filter(k) : enumerate_by_extension(get(k - 1), k));
    return *cache.emplace(k, std::move(built)).first->second;
  };
  return get(n);
}

Tournament transitive_tournament(int n) {
  if (n < 1) throw Error(Errc::out_of_range, "transitive tournament needs order >= 1");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
  return Tournament(Digraph::from_arcs(n, arcs));
}

Tournament circulant_tournament(int n) {
  if (n < 1) throw Error(Errc::out_of_range, "circulant tournament needs order >= 1");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= (n - 1) / 2; ++k) arcs.emplace_back(i, (i + k) % n);
  if (n % 2 == 0)
    for (int i = 0; i < n / 2; ++i) arcs.emplace_back(i, i + n / 2);
  return Tournament(Digraph::from_arcs(n, arcs));
}

Tournament flip_arc(const Tournament& t, int u, int v) {
  return Tournament(t.digraph().with_arc_flipped(u, v));
}

Tournament compose_dominant(const Tournament& t0, const Tournament& t1) {
  const int n0 = t0.order(), n1 = t1.order();
  if (n0 + n1 > kMaxOrder)
    throw Error(Errc::order_cap_exceeded, "composed order " + std::to_string(n0 + n1));
  std::vector<Arc> arcs = t0.digraph().arcs();
  for (auto [u, v] : t1.digraph().arcs()) arcs.emplace_back(u + n0, v + n0);
  for (int u = 0; u < n0; ++u)
    for (int v = 0; v < n1; ++v) arcs.emplace_back(u, v + n0);
  return Tournament(Digraph::from_arcs(n0 + n1, arcs));
}

Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw Error(Errc::out_of_range, "random tournament needs order >= 1");
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arcs.emplace_back(rng.next_bit() ? Arc{j, i} : Arc{i, j});
  return Tournament(Digraph::from_arcs(n, arcs));
}

Tournament random_extension(const Tournament& t, const RandomModel& model) {
  if (model.base_order != t.order())
    throw Error(Errc::out_of_range, "model base order " + std::to_string(model.base_order) +
                                        " != tournament order " + std::to_string(t.order()));
  if (model.bias < BigRat(-1, 2) || model.bias > BigRat(1, 2))
    throw Error(Errc::bias_out_of_range, to_string(model.bias));
  const int n = t.order();
  const double p_up = 0.5 + to_double(model.bias);
  Rng rng(model.seed);
  std::vector<Arc> arcs = t.digraph().arcs();
  for (int v = 0; v < n; ++v) arcs.emplace_back(rng.coin(p_up) ? Arc{n, v} : Arc{v, n});
  return Tournament(Digraph::from_arcs(n + 1, arcs));
}

std::vector<Digraph> all_orientations(const Graph& g, OrientationMode mode, int edge_cap) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > edge_cap)
    throw Error(Errc::edge_cap_exceeded,
                std::to_string(m) + " edges > cap " + std::to_string(edge_cap));
  std::map<std::vector<std::uint8_t>, Digraph> classes;
  std::vector<Digraph> result;
  if (mode == OrientationMode::labeled) result.reserve(std::size_t{1} << m);
  std::vector<Arc> arcs(edges.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (int k = 0; k < m; ++k) {
      auto [a, b] = edges[static_cast<std::size_t>(k)];
      arcs[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? Arc{b, a} : Arc{a, b};
    }
    Digraph d = Digraph::from_arcs(g.order(), arcs);
    if (mode == OrientationMode::labeled)
      result.push_back(std::move(d));
    else
      classes.emplace(canonical_form(d).key, std::move(d));
  }
  if (mode == OrientationMode::up_to_isomorphism) {
    result.reserve(classes.size());
    for (auto& [key, d] : classes) result.push_back(std::move(d));
  }
  return result;
}

Digraph star_orientation(int d, int i) {
  if (d < 0 || i < 0 || i > d)
    throw Error(Errc::index_out_of_range,
                "star out-degree " + std::to_string(i) + " outside [0, " + std::to_string(d) + "]");
  std::vector<Arc> arcs;
  for (int leaf = 1; leaf <= d; ++leaf)
    arcs.push_back(leaf <= i ? Arc{0, leaf} : Arc{leaf, 0});
  return Digraph::from_arcs(d + 1, arcs);
}

Digraph double_star_orientation(int out_u, int in_u, int out_v, int in_v) {
  if (out_u < 1 || in_u < 0 || out_v < 0 || in_v < 1)
    throw Error(Errc::inconsistent_degrees, "centers need the arc (u,v): out_u >= 1, in_v >= 1");
  if (out_u + in_u < 2 || out_v + in_v < 2)
    throw Error(Errc::inconsistent_degrees, "both centers need degree >= 2");
  const int order = out_u + in_u + out_v + in_v;
  if (order > kMaxOrder) throw Error(Errc::order_cap_exceeded, "order " + std::to_string(order));
  std::vector<Arc> arcs{{0, 1}};
  int next = 2;
  for (int k = 0; k < out_u - 1; ++k) arcs.emplace_back(0, next++);
  for (int k = 0; k < in_u; ++k) arcs.emplace_back(next++, 0);
  for (int k = 0; k < out_v; ++k) arcs.emplace_back(1, next++);
  for (int k = 0; k < in_v - 1; ++k) arcs.emplace_back(next++, 1);
  return Digraph::from_arcs(order, arcs);
}

Digraph invariant_double_star() { return double_star_orientation(1, 2, 0, 3); }

Digraph orient_out_branching(const Graph& g, int root) {
  if (!g.is_tree()) throw Error(Errc::not_a_tree, "out-branching needs a tree");
  if (root < 0 || root >= g.order()) throw Error(Errc::out_of_range, "root " + std::to_string(root));
  std::vector<Arc> arcs;
  std::uint32_t seen = bit(root);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    std::uint32_t m = g.adj_mask(v) & ~seen;
    while (m) {
      int w = std::countr_zero(m);
      m &= m - 1;
      seen |= bit(w);
      arcs.emplace_back(v, w);
      stack.push_back(w);
    }
  }
  return Digraph::from_arcs(g.order(), arcs);
}

namespace {

// All simple cycles of length g, anchored at their smallest vertex; returns
// the lexicographically least vertex set, as the cycle's traversal order.
std::vector<int> least_shortest_cycle(const Graph& g, int girth) {
  std::vector<int> best_cycle;
  std::vector<std::uint32_t> best_set_key;  // sorted vertex list of best
  std::vector<int> path;
  std::uint32_t on_path = 0;

  auto consider = [&](const std::vector<int>& cycle) {
    std::vector<std::uint32_t> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (best_cycle.empty() || sorted < best_set_key) {
      best_set_key = sorted;
      best_cycle = cycle;
    }
  };

  std::function<void(int, int)> extend = [&](int anchor, int v) {
    if (static_cast<int>(path.size()) == girth) {
      if (g.adjacent(v, anchor)) consider(path);
      return;
    }
    std::uint32_t m = g.adj_mask(v) & ~on_path & ~full_mask(anchor + 1);
    while (m) {
      int w = std::countr_zero(m);
      m &= m - 1;
      path.push_back(w);
      on_path |= bit(w);
      extend(anchor, w);
      on_path &= ~bit(w);
      path.pop_back();
    }
  };

  for (int anchor = 0; anchor < g.order(); ++anchor) {
    path.assign(1, anchor);
    on_path = bit(anchor);
    extend(anchor, anchor);
  }
  // Canonical traversal: start at the least vertex, step toward its smaller
  // cycle neighbour.
  if (best_cycle.size() >= 3 && best_cycle[1] > best_cycle.back())
    std::reverse(best_cycle.begin() + 1, best_cycle.end());
  return best_cycle;
}

}  // namespace

CycleOrientation orient_with_cycle(const Graph& g) {
  auto girth = g.girth();
  if (!girth) throw Error(Errc::acyclic, "graph is a forest");
  std::vector<int> cycle = least_shortest_cycle(g, *girth);
  // Relabel so the chosen cycle is 0..g-1 in traversal order; the remaining
  // vertices keep their relative order.
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v : cycle) relabel[v] = next++;
  for (int v = 0; v < g.order(); ++v)
    if (relabel[v] < 0) relabel[v] = next++;
  std::vector<Arc> arcs;
  for (auto [a, b] : g.edges()) {
    int i = relabel[a], j = relabel[b];
    if (i > j) std::swap(i, j);
    if (i == 0 && j == *girth - 1)
      arcs.emplace_back(j, i);  // close the directed cycle
    else
      arcs.emplace_back(i, j);
  }
  return {Digraph::from_arcs(g.order(), arcs), *girth};
}

}  // namespace convinv
