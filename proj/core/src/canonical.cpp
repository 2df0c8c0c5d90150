#include "convinv/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace convinv {

namespace {

using Colors = std::vector<int>;

int color_count(const Colors& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Re-rank arbitrary per-vertex signatures into colors 0..k-1, ordered by
// signature value so the ranking is independent of vertex labels.
Colors rank_signatures(const std::vector<std::vector<int>>& sig) {
  const int n = static_cast<int>(sig.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  Colors colors(static_cast<std::size_t>(n));
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
    colors[order[i]] = rank;
  }
  return colors;
}

// Iterated refinement: colour signatures combine the current colour with the
// multisets of out- and in-neighbour colours. Stops at the coarsest stable
// partition.
Colors refine(const Digraph& d, Colors colors) {
  const int n = d.order();
  int k = color_count(colors);
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.assign(static_cast<std::size_t>(1 + 2 * k), 0);
      s[0] = colors[v];
      std::uint32_t m = d.out_mask(v);
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        ++s[1 + colors[w]];
      }
      m = d.in_mask(v);
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        ++s[1 + k + colors[w]];
      }
    }
    Colors next = rank_signatures(sig);
    int k2 = color_count(next);
    if (k2 == k) return next;
    k = k2;
    colors = std::move(next);
  }
}

Colors initial_colors(const Digraph& d) {
  const int n = d.order();
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) sig[v] = {d.out_degree(v), d.in_degree(v)};
  return refine(d, rank_signatures(sig));
}

// Split v off as a singleton cell placed ahead of the rest of its cell.
Colors individualize(const Digraph& d, const Colors& colors, int v) {
  const int n = d.order();
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) sig[w] = {colors[w], w == v ? 0 : 1};
  return refine(d, rank_signatures(sig));
}

int first_split_cell(const Colors& colors) {
  const int k = color_count(colors);
  std::vector<int> size(static_cast<std::size_t>(k), 0);
  for (int c : colors) ++size[c];
  for (int c = 0; c < k; ++c)
    if (size[c] > 1) return c;
  return -1;
}

std::vector<std::uint8_t> pack_key(const Digraph& d, const std::vector<int>& perm) {
  const int n = d.order();
  std::vector<std::uint8_t> key(1 + (static_cast<std::size_t>(n) * n + 7) / 8, 0);
  key[0] = static_cast<std::uint8_t>(n);
  for (int u = 0; u < n; ++u) {
    std::uint32_t m = d.out_mask(u);
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int pos = perm[u] * n + perm[v];
      key[1 + static_cast<std::size_t>(pos / 8)] |= static_cast<std::uint8_t>(0x80u >> (pos % 8));
    }
  }
  return key;
}

bool is_automorphism(const Digraph& d, const std::vector<int>& g) {
  const int n = d.order();
  for (int u = 0; u < n; ++u) {
    std::uint32_t m = d.out_mask(u);
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (!d.has_arc(g[u], g[v])) return false;
    }
  }
  return true;
}

struct Unionfind {
  std::array<int, kMaxOrder> parent;
  explicit Unionfind(int n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Digraph& d) : d_(d), n_(d.order()) {}

  CanonicalForm run() {
    if (n_ == 0) return {{0}, {}};
    std::vector<int> path;
    descend(initial_colors(d_), path);
    return {std::move(best_key_), std::move(best_perm_)};
  }

 private:
  void descend(const Colors& colors, std::vector<int>& path) {
    int cell = first_split_cell(colors);
    if (cell < 0) {
      leaf(colors);
      return;
    }
    std::vector<int> branched;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != cell) continue;
      if (pruned_by_orbit(v, branched, path)) continue;
      branched.push_back(v);
      path.push_back(v);
      descend(individualize(d_, colors, v), path);
      path.pop_back();
    }
  }

  // v can be skipped when a discovered automorphism fixing the whole
  // individualization path maps it into an already-branched vertex: the two
  // subtrees produce identical key sets.
  bool pruned_by_orbit(int v, const std::vector<int>& branched, const std::vector<int>& path) {
    if (branched.empty() || autos_.empty()) return false;
    Unionfind uf(n_);
    for (const auto& g : autos_) {
      bool fixes_path = true;
      for (int p : path)
        if (g[p] != p) {
          fixes_path = false;
          break;
        }
      if (!fixes_path) continue;
      for (int w = 0; w < n_; ++w) uf.merge(w, g[w]);
    }
    for (int b : branched)
      if (uf.find(b) == uf.find(v)) return true;
    return false;
  }

  void leaf(const Colors& colors) {
    // Discrete colors are exactly the canonical labels at this leaf.
    std::vector<int> perm(colors.begin(), colors.end());
    std::vector<std::uint8_t> key = pack_key(d_, perm);
    if (first_perm_.empty()) {
      first_perm_ = perm;
      first_key_ = key;
    } else if (key == first_key_) {
      record_automorphism(first_perm_, perm);
    }
    if (best_perm_.empty() || key < best_key_) {
      best_perm_ = std::move(perm);
      best_key_ = std::move(key);
    } else if (key == best_key_) {
      record_automorphism(best_perm_, perm);
    }
  }

  void record_automorphism(const std::vector<int>& q, const std::vector<int>& p) {
    std::vector<int> qinv(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) qinv[q[v]] = v;
    std::vector<int> g(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      g[v] = qinv[p[v]];
      identity = identity && g[v] == v;
    }
    if (identity || !is_automorphism(d_, g)) return;
    if (std::find(autos_.begin(), autos_.end(), g) == autos_.end()) autos_.push_back(std::move(g));
  }

  const Digraph& d_;
  int n_;
  std::vector<std::uint8_t> best_key_, first_key_;
  std::vector<int> best_perm_, first_perm_;
  std::vector<std::vector<int>> autos_;
};

void check_cap(int order, int cap, const char* what) {
  if (order > cap)
    throw Error(Errc::order_cap_exceeded,
                std::string(what) + ": order " + std::to_string(order) + " > cap " + std::to_string(cap));
}

// Backtracking isomorphism search shared by find_isomorphism and the
// automorphism machinery. cand[u] holds the still-possible images of u.
class IsoSearch {
 public:
  IsoSearch(const Digraph& a, const Digraph& b) : a_(a), b_(b), n_(a.order()) {}

  std::optional<std::vector<int>> run(std::span<const std::pair<int, int>> pins) {
    if (a_.order() != b_.order() || a_.arc_count() != b_.arc_count()) return std::nullopt;
    if (n_ == 0) return std::vector<int>{};
    cand_.assign(static_cast<std::size_t>(n_), 0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (a_.out_degree(u) == b_.out_degree(v) && a_.in_degree(u) == b_.in_degree(v))
          cand_[u] |= bit(v);
    map_.assign(static_cast<std::size_t>(n_), -1);
    assigned_ = 0;
    for (auto [u, v] : pins) {
      if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw Error(Errc::out_of_range, "pinned vertex outside digraph");
      if (!(cand_[u] & bit(v))) return std::nullopt;
      if (!place(u, v)) return std::nullopt;
    }
    if (!search()) return std::nullopt;
    return map_;
  }

 private:
  bool place(int u, int v) {
    map_[u] = v;
    ++assigned_;
    cand_[u] = bit(v);
    for (int w = 0; w < n_; ++w) {
      if (map_[w] >= 0 || w == u) continue;
      std::uint32_t allowed;
      if (a_.has_arc(u, w))
        allowed = b_.out_mask(v);
      else if (a_.has_arc(w, u))
        allowed = b_.in_mask(v);
      else
        allowed = ~(b_.out_mask(v) | b_.in_mask(v));
      cand_[w] &= allowed & ~bit(v);
      if (cand_[w] == 0) return false;
    }
    return true;
  }

  bool search() {
    if (assigned_ == n_) return true;
    int u = -1, best = 33;
    for (int w = 0; w < n_; ++w) {
      if (map_[w] >= 0) continue;
      int c = std::popcount(cand_[w]);
      if (c < best) {
        best = c;
        u = w;
      }
    }
    std::uint32_t options = cand_[u];
    while (options) {
      int v = std::countr_zero(options);
      options &= options - 1;
      auto saved_cand = cand_;
      auto saved_map = map_;
      int saved_assigned = assigned_;
      if (place(u, v) && search()) return true;
      cand_ = std::move(saved_cand);
      map_ = std::move(saved_map);
      assigned_ = saved_assigned;
    }
    return false;
  }

  const Digraph& a_;
  const Digraph& b_;
  int n_;
  std::vector<std::uint32_t> cand_;
  std::vector<int> map_;
  int assigned_ = 0;
};

// Stabilizer-chain automorphism count: |Aut| = |orbit of v0| * |Stab(v0)|,
// applied recursively on the refined partition.
struct AutSearch {
  const Digraph& d;
  std::vector<std::vector<int>> generators;

  std::uint64_t chain(std::vector<std::pair<int, int>>& pins, const Colors& colors) {
    int cell = first_split_cell(colors);
    if (cell < 0) return 1;
    int v0 = -1;
    for (int v = 0; v < d.order(); ++v)
      if (colors[v] == cell) {
        v0 = v;
        break;
      }
    pins.emplace_back(v0, v0);
    std::uint64_t stab = chain(pins, individualize(d, colors, v0));
    pins.pop_back();

    std::uint32_t orbit = bit(v0);
    std::size_t level_gens_begin = generators.size();
    for (int v = 0; v < d.order(); ++v) {
      if (colors[v] != cell || v == v0 || (orbit & bit(v))) continue;
      pins.emplace_back(v0, v);
      auto iso = IsoSearch(d, d).run(pins);
      pins.pop_back();
      if (iso) {
        generators.push_back(*iso);
        orbit = close_orbit(orbit, level_gens_begin);
      }
    }
    return static_cast<std::uint64_t>(std::popcount(orbit)) * stab;
  }

  std::uint32_t close_orbit(std::uint32_t orbit, std::size_t gens_begin) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = gens_begin; i < generators.size(); ++i) {
        std::uint32_t m = orbit;
        while (m) {
          int v = std::countr_zero(m);
          m &= m - 1;
          int w = generators[i][v];
          if (!(orbit & bit(w))) {
            orbit |= bit(w);
            grew = true;
          }
        }
      }
    }
    return orbit;
  }
};

}  // namespace

CanonicalForm canonical_form(const Digraph& d, int order_cap) {
  check_cap(d.order(), order_cap, "canonical_form");
  return CanonicalSearch(d).run();
}

std::string key_to_hex(const std::vector<std::uint8_t>& key) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(key.size() * 2);
  for (std::uint8_t b : key) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

AutomorphismGroup automorphisms(const Digraph& d, int order_cap) {
  check_cap(d.order(), order_cap, "automorphisms");
  AutSearch search{d, {}};
  std::vector<std::pair<int, int>> pins;
  std::uint64_t count = d.order() == 0 ? 1 : search.chain(pins, initial_colors(d));
  AutomorphismGroup group;
  group.count = count;
  group.generators = std::move(search.generators);
  return group;
}

std::optional<std::vector<int>> find_isomorphism(const Digraph& a, const Digraph& b,
                                                 std::span<const std::pair<int, int>> pins) {
  return IsoSearch(a, b).run(pins);
}

bool is_isomorphic(const Digraph& a, const Digraph& b, int order_cap) {
  if (a.order() != b.order()) return false;
  if (a.arc_count() != b.arc_count()) return false;
  return canonical_form(a, order_cap).key == canonical_form(b, order_cap).key;
}

std::vector<std::pair<int, int>> transitive_pairs(const Digraph& d, int order_cap) {
  check_cap(d.order(), order_cap, "transitive_pairs");
  std::vector<std::pair<int, int>> result;
  const int n = d.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (d.adjacent(u, v)) continue;
      std::pair<int, int> pins[2] = {{u, v}, {v, u}};
      if (find_isomorphism(d, d, pins)) result.emplace_back(u, v);
    }
  }
  return result;
}

}  // namespace convinv
