#include "convinv/digraph.hpp"

#include <algorithm>
#include <string>

namespace convinv {

Digraph Digraph::from_arcs(int order, std::span<const Arc> arcs) {
  if (order < 0 || order > kMaxOrder)
    throw Error(Errc::out_of_range,
                "order " + std::to_string(order) + " outside [0, " + std::to_string(kMaxOrder) + "]");
  Digraph d;
  d.n_ = order;
  d.out_.assign(static_cast<std::size_t>(order), 0);
  d.in_.assign(static_cast<std::size_t>(order), 0);
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= order || v < 0 || v >= order)
      throw Error(Errc::out_of_range,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) + ") on " +
                      std::to_string(order) + " vertices");
    if (u == v)
      throw Error(Errc::loop_arc, "loop at vertex " + std::to_string(u));
    if (d.has_arc(v, u))
      throw Error(Errc::digon_arc,
                  "both directions between " + std::to_string(u) + " and " + std::to_string(v));
    if (d.has_arc(u, v))
      throw Error(Errc::out_of_range,
                  "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    d.add_arc_unchecked(u, v);
  }
  return d;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(static_cast<std::size_t>(arc_count_));
  for (int u = 0; u < n_; ++u) {
    std::uint32_t m = out_[u];
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      result.emplace_back(u, v);
    }
  }
  return result;
}

Digraph Digraph::converse() const {
  Digraph d;
  d.n_ = n_;
  d.arc_count_ = arc_count_;
  d.out_ = in_;
  d.in_ = out_;
  return d;
}

Digraph Digraph::with_arc(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw Error(Errc::out_of_range, "arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (u == v) throw Error(Errc::loop_arc, "loop at vertex " + std::to_string(u));
  if (has_arc(v, u))
    throw Error(Errc::digon_arc,
                "both directions between " + std::to_string(u) + " and " + std::to_string(v));
  if (has_arc(u, v))
    throw Error(Errc::out_of_range,
                "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
  Digraph d = *this;
  d.add_arc_unchecked(u, v);
  return d;
}

Digraph Digraph::with_arc_flipped(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw Error(Errc::out_of_range, "arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (!has_arc(u, v))
    throw Error(Errc::arc_absent, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
  Digraph d = *this;
  d.out_[u] &= ~bit(v);
  d.in_[v] &= ~bit(u);
  d.out_[v] |= bit(u);
  d.in_[u] |= bit(v);
  return d;
}

Digraph Digraph::relabeled(std::span<const int> perm) const {
  Digraph d;
  d.n_ = n_;
  d.arc_count_ = arc_count_;
  d.out_.assign(static_cast<std::size_t>(n_), 0);
  d.in_.assign(static_cast<std::size_t>(n_), 0);
  for (int u = 0; u < n_; ++u) {
    std::uint32_t m = out_[u];
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      d.out_[perm[u]] |= bit(perm[v]);
      d.in_[perm[v]] |= bit(perm[u]);
    }
  }
  return d;
}

Digraph Digraph::induced(std::uint32_t mask) const {
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v)
    if (mask & bit(v)) keep.push_back(v);
  Digraph d;
  d.n_ = static_cast<int>(keep.size());
  d.out_.assign(keep.size(), 0);
  d.in_.assign(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (has_arc(keep[i], keep[j])) d.add_arc_unchecked(static_cast<int>(i), static_cast<int>(j));
  return d;
}

std::vector<std::uint32_t> Digraph::weak_components() const {
  std::vector<std::uint32_t> comps;
  std::uint32_t seen = 0;
  for (int s = 0; s < n_; ++s) {
    if (seen & bit(s)) continue;
    std::uint32_t comp = bit(s);
    std::uint32_t frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t nbrs = (out_[v] | in_[v]) & ~comp;
      comp |= nbrs;
      frontier |= nbrs;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool Digraph::weakly_connected() const {
  return n_ <= 1 || weak_components().size() == 1;
}

Tournament::Tournament(Digraph d) : d_(std::move(d)) {
  const int n = d_.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!d_.adjacent(u, v))
        throw Error(Errc::arc_absent, "no arc between " + std::to_string(u) + " and " +
                                          std::to_string(v) + "; not a tournament");
}

DegreeSequence degree_sequence(const Digraph& d) {
  DegreeSequence seq;
  const int n = d.order();
  seq.pairs.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) seq.pairs.emplace_back(d.out_degree(v), d.in_degree(v));
  seq.multiset = seq.pairs;
  std::sort(seq.multiset.begin(), seq.multiset.end());
  for (auto [o, i] : seq.pairs) {
    seq.out_multiset.push_back(o);
    seq.in_multiset.push_back(i);
    seq.max_degree = std::max(seq.max_degree, o + i);
  }
  std::sort(seq.out_multiset.begin(), seq.out_multiset.end());
  std::sort(seq.in_multiset.begin(), seq.in_multiset.end());
  if (seq.max_degree >= 1)
    seq.max_odd_degree = seq.max_degree % 2 == 1 ? seq.max_degree : seq.max_degree - 1;
  if (n > 0) {
    const int deg0 = seq.pairs[0].first + seq.pairs[0].second;
    bool regular = deg0 >= 1;
    for (auto [o, i] : seq.pairs) regular = regular && o + i == deg0;
    if (regular) {
      seq.regular_degree = deg0;
      seq.out_degree_counts.assign(static_cast<std::size_t>(deg0) + 1, 0);
      for (auto [o, i] : seq.pairs) ++seq.out_degree_counts[static_cast<std::size_t>(o)];
    }
  }
  return seq;
}

}  // namespace convinv
