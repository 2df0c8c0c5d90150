// Canonical labeling, isomorphism testing, automorphism groups and
// vertex-transitive pair detection for small digraphs.
//
// The canonical form is computed by iterated out/in-degree colour refinement
// plus backtracking over the coarsest stable partition (individualise the
// first cell of size > 1, recurse, keep the lexicographically least relabeled
// adjacency matrix). Automorphisms discovered along the way prune branches
// that cannot improve the best leaf. Correct for all inputs; tuned for
// order <= 12.

#ifndef CONVINV_CANONICAL_HPP
#define CONVINV_CANONICAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "convinv/digraph.hpp"

namespace convinv {

inline constexpr int kDefaultCanonicalCap = 12;

struct CanonicalForm {
  // Total-order key: order byte followed by the packed relabeled adjacency
  // matrix. Equal keys iff isomorphic digraphs.
  std::vector<std::uint8_t> key;
  // relabeling[old] = canonical label; applying it to the source digraph
  // yields the keyed form exactly.
  std::vector<int> relabeling;

  bool operator==(const CanonicalForm& other) const { return key == other.key; }
  bool operator<(const CanonicalForm& other) const { return key < other.key; }
};

CanonicalForm canonical_form(const Digraph& d, int order_cap = kDefaultCanonicalCap);

// Hex rendering of a canonical key, for reports and map keys.
std::string key_to_hex(const std::vector<std::uint8_t>& key);

struct AutomorphismGroup {
  std::uint64_t count = 1;
  // Transversal generators of a stabilizer chain; closing them reproduces
  // the full group.
  std::vector<std::vector<int>> generators;
};

AutomorphismGroup automorphisms(const Digraph& d, int order_cap = kDefaultCanonicalCap);

// Any isomorphism a -> b extending the pinned partial map, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Digraph& a, const Digraph& b,
                                                 std::span<const std::pair<int, int>> pins = {});

// Canonical-key comparison; false (not an error) when orders differ.
bool is_isomorphic(const Digraph& a, const Digraph& b, int order_cap = kDefaultCanonicalCap);

// Non-adjacent unordered pairs {u, v} swapped by some automorphism.
std::vector<std::pair<int, int>> transitive_pairs(const Digraph& d,
                                                  int order_cap = kDefaultCanonicalCap);

}  // namespace convinv

#endif
