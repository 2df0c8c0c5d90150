#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "convinv/canonical.hpp"
#include "convinv/generate.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace convinv;

TEST_CASE("tournament catalogue sizes for small orders") {
  CHECK(nonisomorphic_tournaments(1).size() == 1);
  CHECK(nonisomorphic_tournaments(2).size() == 1);
  CHECK(nonisomorphic_tournaments(3).size() == 2);
  CHECK(nonisomorphic_tournaments(4).size() == 4);
  CHECK(nonisomorphic_tournaments(5).size() == 12);
}

TEST_CASE("catalogue sizes match grouping all labeled tournaments by brute force") {
  for (int n = 1; n <= 5; ++n)
    CHECK(nonisomorphic_tournaments(n).size() == oracle::tournament_class_count_by_brute_force(n));
}

TEST_CASE("catalogue order cap") {
  CHECK_THROWS_WITH_AS(nonisomorphic_tournaments(9), doctest::Contains("OrderCapExceeded"), Error);
}

TEST_CASE("catalogue entries are canonical, distinct and deterministic") {
  const auto& catalogue = nonisomorphic_tournaments(5);
  std::set<std::vector<std::uint8_t>> keys;
  for (const Tournament& t : catalogue) {
    auto form = canonical_form(t.digraph());
    CHECK(keys.insert(form.key).second);
    // Emitted in canonical form: relabeling is the identity.
    CHECK(t.digraph().relabeled(form.relabeling) == t.digraph());
  }
  CHECK(std::is_sorted(catalogue.begin(), catalogue.end(),
                       [](const Tournament& a, const Tournament& b) {
                         return canonical_form(a.digraph()).key < canonical_form(b.digraph()).key;
                       }));
}

TEST_CASE("transitive tournament") {
  CHECK(transitive_tournament(2).digraph() == fixture::single_arc());
  auto t4 = transitive_tournament(4).digraph();
  CHECK(t4.out_degree(0) == 3);
  CHECK(t4.out_degree(1) == 2);
  CHECK(t4.out_degree(2) == 1);
  CHECK(t4.out_degree(3) == 0);
  for (int n = 2; n <= 6; ++n) {
    auto t = transitive_tournament(n).digraph();
    CHECK(is_isomorphic(t, t.converse()));
  }
}

TEST_CASE("flip_arc") {
  auto flipped = flip_arc(transitive_tournament(3), 0, 1).digraph();
  CHECK(flipped.out_degree(0) == 1);
  CHECK(flipped.out_degree(1) == 2);
  CHECK(flipped.out_degree(2) == 0);
  CHECK_THROWS_WITH_AS(flip_arc(transitive_tournament(3), 1, 0), doctest::Contains("ArcAbsent"),
                       Error);
  auto twice = flip_arc(flip_arc(transitive_tournament(5), 0, 3), 3, 0);
  CHECK(twice.digraph() == transitive_tournament(5).digraph());
}

TEST_CASE("compose_dominant") {
  Tournament one(Digraph::from_arcs(1, {}));
  Tournament c3(fixture::cyclic_triangle());
  auto dom = compose_dominant(one, c3).digraph();
  CHECK(dom.out_degree(0) == 3);
  CHECK(dom.in_degree(0) == 0);
  for (int v = 1; v <= 3; ++v) CHECK(dom.out_degree(v) == 1);

  Tournament empty(Digraph::from_arcs(0, {}));
  CHECK(compose_dominant(empty, c3).digraph() == c3.digraph());
}

TEST_CASE("circulant tournaments are strong enough to carry a directed Hamilton cycle") {
  for (int n : {3, 4, 5, 6, 7, 8}) {
    auto t = circulant_tournament(n).digraph();
    for (int i = 0; i < n; ++i) CHECK(t.has_arc(i, (i + 1) % n));
  }
}

TEST_CASE("random tournaments are reproducible and unbiased") {
  CHECK(random_tournament(1, 5).digraph().arc_count() == 0);
  CHECK(random_tournament(6, 42).digraph() == random_tournament(6, 42).digraph());
  CHECK_FALSE(random_tournament(6, 42).digraph() == random_tournament(6, 43).digraph());

  // Mean out-degree of vertex 0 over samples: binomial(5, 1/2).
  const int samples = 10000;
  double total = 0;
  for (int s = 0; s < samples; ++s)
    total += random_tournament(6, 1000 + static_cast<std::uint64_t>(s)).digraph().out_degree(0);
  const double mean = total / samples;
  const double sigma = std::sqrt(5.0 * 0.25 / samples);
  CHECK(std::abs(mean - 2.5) <= 3 * sigma);
}

TEST_CASE("random extension honours deterministic biases") {
  Tournament base = transitive_tournament(5);
  auto all_out = random_extension(base, {5, BigRat(1, 2), 7});
  CHECK(all_out.digraph().out_degree(5) == 5);
  auto all_in = random_extension(base, {5, BigRat(-1, 2), 7});
  CHECK(all_in.digraph().in_degree(5) == 5);
  CHECK_THROWS_WITH_AS(random_extension(base, {5, BigRat(3, 4), 7}),
                       doctest::Contains("BiasOutOfRange"), Error);
  CHECK_THROWS_AS(random_extension(base, {4, BigRat(0), 7}), Error);
}

TEST_CASE("random extension at zero bias has binomial out-degree") {
  Tournament base = transitive_tournament(4);
  const int samples = 10000;
  double total = 0;
  for (int s = 0; s < samples; ++s)
    total += random_extension(base, {4, BigRat(0), 9000 + static_cast<std::uint64_t>(s)})
                 .digraph()
                 .out_degree(4);
  const double mean = total / samples;
  const double sigma = std::sqrt(4.0 * 0.25 / samples);
  CHECK(std::abs(mean - 2.0) <= 3 * sigma);
}

TEST_CASE("all orientations of small graphs") {
  auto labeled = all_orientations(Graph::path(3), OrientationMode::labeled);
  CHECK(labeled.size() == 4);
  for (const Digraph& d : labeled) CHECK(underlying_graph(d) == Graph::path(3));
  CHECK(all_orientations(Graph::path(3), OrientationMode::up_to_isomorphism).size() == 3);

  CHECK(all_orientations(Graph::from_edges(2, {{0, 1}}), OrientationMode::labeled).size() == 2);
  CHECK(all_orientations(Graph::from_edges(2, {{0, 1}}), OrientationMode::up_to_isomorphism).size() ==
        1);

  CHECK(all_orientations(Graph::star(3), OrientationMode::labeled).size() == 8);
  CHECK(all_orientations(Graph::star(3), OrientationMode::up_to_isomorphism).size() == 4);

  CHECK_THROWS_WITH_AS(all_orientations(Graph::complete(7), OrientationMode::labeled),
                       doctest::Contains("EdgeCapExceeded"), Error);
}

TEST_CASE("star orientations") {
  Digraph out3 = star_orientation(3, 3);
  CHECK(out3.out_degree(0) == 3);
  CHECK(out3.in_degree(0) == 0);
  Digraph in2 = star_orientation(2, 0);
  CHECK(in2.in_degree(0) == 2);
  CHECK_THROWS_WITH_AS(star_orientation(3, 4), doctest::Contains("IndexOutOfRange"), Error);
  for (int d = 1; d <= 5; ++d)
    for (int i = 0; i <= d; ++i)
      CHECK(is_isomorphic(star_orientation(d, i), star_orientation(d, d - i).converse()));
}

TEST_CASE("double star orientations") {
  Digraph case1 = double_star_orientation(2, 0, 2, 2);
  CHECK(case1.order() == 6);
  CHECK(case1.out_degree(0) == 2);
  CHECK(case1.in_degree(0) == 0);
  CHECK(case1.out_degree(1) == 2);
  CHECK(case1.in_degree(1) == 2);

  CHECK(is_isomorphic(double_star_orientation(1, 2, 0, 3), fixture::mirrored_in_star()));

  Digraph mirror_out = double_star_orientation(3, 0, 2, 1);
  Digraph in_star_mirrored = double_star_orientation(1, 2, 0, 3).converse();
  CHECK(is_isomorphic(mirror_out, in_star_mirrored));

  CHECK_THROWS_WITH_AS(double_star_orientation(0, 2, 2, 1), doctest::Contains("InconsistentDegrees"),
                       Error);
  CHECK_THROWS_WITH_AS(double_star_orientation(1, 0, 0, 1), doctest::Contains("InconsistentDegrees"),
                       Error);
}

TEST_CASE("out-branchings") {
  Digraph branched = orient_out_branching(Graph::star(3), 1);
  CHECK(branched.out_degree(1) == 1);
  CHECK(branched.in_degree(1) == 0);
  CHECK(branched.out_degree(0) == 2);
  int sinks = 0;
  for (int v = 0; v < 4; ++v) sinks += branched.out_degree(v) == 0;
  CHECK(sinks == 2);

  CHECK(orient_out_branching(Graph::path(4), 0) == fixture::directed_path(4));
  // Converse of an out-branching is the in-branching at the same root.
  Digraph in_branching = orient_out_branching(Graph::star(3), 1).converse();
  CHECK(in_branching.in_degree(1) == 1);
  CHECK(in_branching.out_degree(1) == 0);

  CHECK_THROWS_WITH_AS(orient_out_branching(Graph::cycle(4), 0), doctest::Contains("NotATree"),
                       Error);
}

TEST_CASE("cycle-first orientations") {
  auto k4 = orient_with_cycle(Graph::complete(4));
  CHECK(k4.girth == 3);
  CHECK(k4.orientation.has_arc(0, 1));
  CHECK(k4.orientation.has_arc(1, 2));
  CHECK(k4.orientation.has_arc(2, 0));
  CHECK(k4.orientation.in_degree(3) == 3);

  Graph c5_pendant = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
  auto oriented = orient_with_cycle(c5_pendant);
  CHECK(oriented.girth == 5);
  int cycle_arcs = 0;
  for (int i = 0; i < 5; ++i) cycle_arcs += oriented.orientation.has_arc(i, (i + 1) % 5);
  CHECK(cycle_arcs == 5);
  CHECK(oriented.orientation.out_degree(5) == 0);
  CHECK(oriented.orientation.in_degree(5) == 1);

  CHECK_THROWS_WITH_AS(orient_with_cycle(Graph::path(5)), doctest::Contains("Acyclic"), Error);
}
