// The converse-invariance decision procedure and everything built on it:
// invariance-preserving constructions, the star and double-star classifiers,
// per-orientation witnesses for graphs of maximum degree >= 3, and the
// recursive mirror-tower explorer.
//
// decide() reduces "f_T(D) = f_T(-D) for every tournament T" to an exhaustive
// check over the non-isomorphic tournaments of order |D|; completeness of the
// reduction follows from the subset decomposition of copy counts.

#ifndef CONVINV_INVARIANCE_HPP
#define CONVINV_INVARIANCE_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "convinv/digraph.hpp"
#include "convinv/generate.hpp"
#include "convinv/graph.hpp"

namespace convinv {

inline constexpr int kDefaultDecideCap = 8;
inline constexpr int kDefaultTowerCap = 12;

struct InvariantCertificate {
  int order = 0;
  std::size_t classes_examined = 0;
};

struct WitnessCertificate {
  Tournament witness;
  std::uint64_t copies_d = 0;
  std::uint64_t copies_converse = 0;
  // Smallest odd t <= Delta_o with c_t(D) != 0, when the polynomial already
  // certifies non-invariance.
  std::optional<int> fast_fail_odd_term;
};

struct InvarianceVerdict {
  std::variant<InvariantCertificate, WitnessCertificate> outcome;

  bool invariant() const { return std::holds_alternative<InvariantCertificate>(outcome); }
  const InvariantCertificate& certificate() const { return std::get<InvariantCertificate>(outcome); }
  const WitnessCertificate& witness() const { return std::get<WitnessCertificate>(outcome); }
};

struct DecideOptions {
  int order_cap = kDefaultDecideCap;
  int workers = 0;  // 0 = hardware concurrency
};

// Exhaustive decision over all tournament classes of order |D|, in canonical
// order; the first differing class becomes the witness. The verdict does not
// depend on the worker count.
InvarianceVerdict decide(const Digraph& d, const DecideOptions& options = {});

// D + (u, v) for a vertex-transitive non-adjacent pair; preserves invariance.
Digraph add_transitive_arc(const Digraph& d, int u, int v);

// Two disjoint copies of D joined by one arc from copy one's u to copy two's.
Digraph bridge_mirror(const Digraph& d, int u);

struct MirrorStep {
  Arc bridge;            // the removed arc, in the parent digraph's labels
  Digraph half;          // component of the bridge tail, renumbered
  int mirror_vertex = 0; // the bridge tail's label inside half
};

struct MirrorTowerTrace {
  bool recognized = false;
  std::vector<MirrorStep> steps;  // outermost mirror first
  std::optional<Digraph> base;    // the path orientation at the bottom
};

// True iff D is an orientation of a path, or some arc (a, b) splits D into
// two components that an isomorphism matches up with a -> b and the a-side
// recursively satisfies the predicate.
MirrorTowerTrace is_path_mirror_tower(const Digraph& d, int order_cap = kDefaultTowerCap);

enum class Prediction { invariant, not_invariant };

// Orientations of K_{1,d}, d >= 3: invariant iff the center's out-degree is
// exactly half of d.
Prediction classify_star(int d, int i);

// Orientations of double stars that are not paths: invariant iff D is
// isomorphic to -D or one of D, -D is the invariant double star.
Prediction classify_double_star(const Digraph& d);

enum class WitnessBranch { tree, cycle };

struct OrientationWitness {
  WitnessBranch branch{};
  Digraph orientation;
  Tournament tournament;
  std::uint64_t copies_d = 0;
  std::uint64_t copies_converse = 0;
  // Tree branch only: the unequal source/sink sums of the balance condition.
  std::optional<std::pair<long long, long long>> source_sink_sums;
};

// A non-converse-invariant orientation of G (connected, max degree >= 3),
// with a tournament telling it apart from its converse.
OrientationWitness witness_for_orientation(const Graph& g, const DecideOptions& options = {});

struct ConjectureProbeRow {
  Digraph representative;       // least canonical key among {D, -D}
  bool self_converse = false;
  bool invariant = false;
  bool mirror_tower = false;
  bool consistent = false;      // invariant == (self_converse || mirror_tower)
};

struct ConjectureProbeReport {
  std::vector<ConjectureProbeRow> rows;  // one per {D, -D} pair
  std::vector<std::size_t> counterexamples;
  bool consistent = true;
};

// Tests every orientation class of a tree with max degree >= 3 against
// "invariant iff self-converse or a mirror tower over a path orientation".
ConjectureProbeReport conjecture_probe(const Graph& g, const DecideOptions& options = {});

}  // namespace convinv

#endif
