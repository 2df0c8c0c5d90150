#include "convinv/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "convinv/canonical.hpp"
#include "convinv/generate.hpp"
#include "convinv/rng.hpp"

namespace convinv {

namespace {

// Greedy connected ordering: repeatedly take the vertex with the most
// already-ordered neighbours (ties: larger degree, then smaller index).
std::vector<int> embedding_order(const Digraph& d) {
  const int n = d.order();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::uint32_t placed = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1, pick_back = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (placed & bit(v)) continue;
      int back = std::popcount((d.out_mask(v) | d.in_mask(v)) & placed);
      int deg = d.degree(v);
      if (back > pick_back || (back == pick_back && deg > pick_deg)) {
        pick = v;
        pick_back = back;
        pick_deg = deg;
      }
    }
    order.push_back(pick);
    placed |= bit(pick);
  }
  return order;
}

class EmbeddingCounter {
 public:
  EmbeddingCounter(const Digraph& d, const Digraph& host) : d_(d), host_(host) {}

  std::uint64_t count(std::optional<std::pair<int, int>> root) {
    const int n = d_.order();
    if (n > host_.order()) return 0;
    base_.assign(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < host_.order(); ++v)
        if (host_.out_degree(v) >= d_.out_degree(u) && host_.in_degree(v) >= d_.in_degree(u))
          base_[u] |= bit(v);
    }
    order_ = embedding_order(d_);
    if (root) {
      if (!(base_[root->first] & bit(root->second))) return 0;
      base_[root->first] = bit(root->second);
      // Root goes first so its constraint propagates from the start.
      auto it = std::find(order_.begin(), order_.end(), root->first);
      std::rotate(order_.begin(), it, it + 1);
    }
    image_.assign(static_cast<std::size_t>(n), -1);
    total_ = 0;
    descend(0, 0);
    return total_;
  }

 private:
  void descend(std::size_t depth, std::uint32_t used) {
    if (depth == order_.size()) {
      ++total_;
      return;
    }
    const int u = order_[depth];
    std::uint32_t cand = base_[u] & ~used;
    // Arcs into already-placed vertices pin the candidate set.
    for (std::size_t i = 0; i < depth && cand; ++i) {
      const int w = order_[i];
      if (d_.has_arc(u, w))
        cand &= host_.in_mask(image_[w]);
      else if (d_.has_arc(w, u))
        cand &= host_.out_mask(image_[w]);
    }
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      image_[u] = v;
      descend(depth + 1, used | bit(v));
    }
    image_[u] = -1;
  }

  const Digraph& d_;
  const Digraph& host_;
  std::vector<std::uint32_t> base_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::uint64_t total_ = 0;
};

void check_pattern_cap(const Digraph& d, int cap) {
  if (d.order() > cap)
    throw Error(Errc::order_cap_exceeded,
                "pattern order " + std::to_string(d.order()) + " > cap " + std::to_string(cap));
}

void check_bias(const BigRat& bias) {
  if (bias < BigRat(-1, 2) || bias > BigRat(1, 2))
    throw Error(Errc::bias_out_of_range, to_string(bias));
}

}  // namespace

std::uint64_t ism(const Digraph& d, const Digraph& host, int pattern_cap) {
  check_pattern_cap(d, pattern_cap);
  return EmbeddingCounter(d, host).count(std::nullopt);
}

std::uint64_t ism_rooted(const Digraph& d, int u, const Digraph& host, int v, int pattern_cap) {
  check_pattern_cap(d, pattern_cap);
  if (u < 0 || u >= d.order() || v < 0 || v >= host.order())
    throw Error(Errc::out_of_range, "root outside digraph");
  return EmbeddingCounter(d, host).count(std::pair{u, v});
}

CountReport copies(const Digraph& d, const Tournament& t, bool with_rooted, int pattern_cap) {
  check_pattern_cap(d, pattern_cap);
  CountReport report;
  report.ism = ism(d, t.digraph(), pattern_cap);
  report.aut = automorphisms(d, std::max(d.order(), kDefaultCanonicalCap)).count;
  report.copies = report.ism / report.aut;
  if (report.copies * report.aut != report.ism)
    throw std::logic_error("aut does not divide ism; counting is broken");
  if (with_rooted) {
    report.rooted.emplace();
    for (int u = 0; u < d.order(); ++u)
      for (int v = 0; v < t.order(); ++v) {
        std::uint64_t c = ism_rooted(d, u, t.digraph(), v, pattern_cap);
        if (c) report.rooted->emplace(std::pair{u, v}, c);
      }
  }
  return report;
}

BigRat expected_ism_formula(const Digraph& d, const BigRat& bias) {
  check_bias(bias);
  const int n = d.order();
  if (n == 0) return BigRat(0);
  BigInt factorial = 1;
  for (int k = 2; k <= n - 1; ++k) factorial *= k;
  const BigRat up = BigRat(1) + BigRat(2) * bias;
  const BigRat down = BigRat(1) - BigRat(2) * bias;
  BigRat sum(0);
  for (int v = 0; v < n; ++v)
    sum += rat_pow(up, d.out_degree(v)) * rat_pow(down, d.in_degree(v));
  BigInt scale = BigInt(1) << d.arc_count();
  return BigRat(factorial) * sum / BigRat(scale);
}

McEstimate mc_expected_ism(const Digraph& d, const BigRat& bias, std::uint64_t samples,
                           std::uint64_t seed) {
  check_bias(bias);
  if (samples < 1) throw Error(Errc::out_of_range, "need at least one sample");
  const int n = d.order();
  if (n == 0) return {0.0, 0.0, samples};
  Rng parent(seed);
  RandomModel model{n - 1, bias, 0};
  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng child = parent.split(i);
    Tournament base = n - 1 >= 1 ? random_tournament(n - 1, child.next_u64())
                                 : Tournament(Digraph::from_arcs(0, {}));
    model.seed = child.next_u64();
    Tournament extended = random_extension(base, model);
    auto value = static_cast<double>(ism(d, extended.digraph()));
    sum += value;
    sum_sq += value * value;
  }
  auto count = static_cast<double>(samples);
  double mean = sum / count;
  double variance = samples > 1 ? std::max(0.0, (sum_sq - count * mean * mean) / (count - 1)) : 0.0;
  return {mean, std::sqrt(variance / count), samples};
}

}  // namespace convinv
