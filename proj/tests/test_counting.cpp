#include <doctest.h>

#include <bit>
#include <cmath>

#include "convinv/canonical.hpp"
#include "convinv/counting.hpp"
#include "convinv/generate.hpp"
#include "convinv/rng.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace convinv;

namespace {

Tournament dominant_source_over_c3() {
  return compose_dominant(Tournament(Digraph::from_arcs(1, {})), Tournament(fixture::cyclic_triangle()));
}

Digraph random_orgraph(int n, Rng& rng) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      switch (rng.next_u64() % 3) {
        case 1: arcs.emplace_back(i, j); break;
        case 2: arcs.emplace_back(j, i); break;
        default: break;
      }
  return Digraph::from_arcs(n, arcs);
}

}  // namespace

TEST_CASE("ism on named instances") {
  for (int n = 2; n <= 6; ++n)
    CHECK(ism(fixture::single_arc(), transitive_tournament(n).digraph()) ==
          static_cast<std::uint64_t>(n) * (n - 1) / 2);
  CHECK(ism(fixture::directed_path(3), fixture::cyclic_triangle()) == 3);
  CHECK(ism(star_orientation(3, 3), dominant_source_over_c3().digraph()) == 6);
}

TEST_CASE("ism matches naive enumeration on random pairs") {
  Rng rng(2024);
  for (int round = 0; round < 60; ++round) {
    int k = 1 + static_cast<int>(rng.next_u64() % 4);
    int n = k + static_cast<int>(rng.next_u64() % 3);
    Digraph d = random_orgraph(k, rng);
    Digraph host = random_orgraph(n, rng);
    CHECK(ism(d, host) == oracle::naive_ism(d, host));
  }
}

TEST_CASE("rooted counts partition the total") {
  Digraph arc = fixture::single_arc();
  Digraph t2 = transitive_tournament(2).digraph();
  CHECK(ism_rooted(arc, 0, t2, 0) == 1);
  CHECK(ism_rooted(arc, 1, t2, 0) == 0);

  Digraph p3 = fixture::directed_path(3);
  Digraph c3 = fixture::cyclic_triangle();
  for (int v = 0; v < 3; ++v) CHECK(ism_rooted(p3, 0, c3, v) == 1);

  Digraph wedge = star_orientation(2, 2);
  std::uint64_t total = 0;
  for (int v = 0; v < 3; ++v) total += ism_rooted(wedge, 0, c3, v);
  CHECK(total == ism(wedge, c3));
}

TEST_CASE("copy counts on the paper-style instances") {
  // Flipped transitive tournament distinguishes the source double star.
  Digraph d = double_star_orientation(2, 0, 2, 2);
  Tournament t = flip_arc(transitive_tournament(6), 0, 2);
  CHECK(copies(d, t).copies == 3);
  CHECK(copies(d.converse(), t).copies == 6);

  CHECK(copies(star_orientation(3, 3), dominant_source_over_c3()).copies == 1);
  CHECK(copies(star_orientation(3, 0), dominant_source_over_c3()).copies == 0);

  Tournament c3(fixture::cyclic_triangle());
  CHECK(copies(fixture::directed_path(3), c3).copies == 3);
  CHECK(copies(fixture::directed_path(3).converse(), c3).copies == 3);
}

TEST_CASE("copies is zero, not an error, for patterns larger than the host") {
  CHECK(copies(fixture::directed_path(4), Tournament(fixture::cyclic_triangle())).copies == 0);
}

TEST_CASE("copies reports divisible counts and a rooted breakdown summing to ism") {
  Rng rng(31337);
  for (int round = 0; round < 20; ++round) {
    Digraph d = random_orgraph(1 + static_cast<int>(rng.next_u64() % 4), rng);
    Tournament t = random_tournament(5, rng.next_u64());
    CountReport report = copies(d, t, true);
    CHECK(report.copies * report.aut == report.ism);
    std::uint64_t row = 0;
    for (const auto& [key, value] : *report.rooted)
      if (key.first == 0) row += value;
    if (d.order() >= 1) CHECK(row == report.ism);
  }
}

TEST_CASE("converse duality of ism") {
  Rng rng(5150);
  for (int round = 0; round < 40; ++round) {
    Digraph d = random_orgraph(1 + static_cast<int>(rng.next_u64() % 4), rng);
    Digraph host = random_orgraph(1 + static_cast<int>(rng.next_u64() % 6), rng);
    CHECK(ism(d, host) == ism(d.converse(), host.converse()));
  }
}

TEST_CASE("copy counts decompose over vertex subsets") {
  Rng rng(777);
  for (int round = 0; round < 10; ++round) {
    Digraph d = random_orgraph(3, rng);
    Tournament t = random_tournament(6, rng.next_u64());
    const std::uint64_t aut = automorphisms(d).count;
    std::uint64_t direct = ism(d, t.digraph()) / aut;
    std::uint64_t by_subsets = 0;
    for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
      if (std::popcount(mask) != 3) continue;
      by_subsets += ism(d, t.digraph().induced(mask)) / aut;
    }
    CHECK(direct == by_subsets);
  }
}

TEST_CASE("isomorphic tournaments carry equal copy counts") {
  Rng rng(4242);
  Digraph d = star_orientation(2, 1);
  Tournament t = random_tournament(5, 1);
  std::vector<int> perm{3, 1, 4, 0, 2};
  Tournament relabeled(t.digraph().relabeled(perm));
  CHECK(copies(d, t).copies == copies(d, relabeled).copies);
}

TEST_CASE("expectation formula on named instances") {
  CHECK(expected_ism_formula(fixture::single_arc(), BigRat(0)) == BigRat(1));
  CHECK(expected_ism_formula(fixture::single_arc(), BigRat(1, 2)) == BigRat(1));
  CHECK(expected_ism_formula(star_orientation(2, 2), BigRat(0)) == BigRat(3, 2));
  CHECK_THROWS_WITH_AS(expected_ism_formula(fixture::single_arc(), BigRat(2, 3)),
                       doctest::Contains("BiasOutOfRange"), Error);
}

TEST_CASE("expectation formula equals the finite-space average on small instances") {
  for (const Digraph& d : {fixture::single_arc(), star_orientation(2, 2), fixture::directed_path(3),
                           fixture::cyclic_triangle()})
    for (const BigRat& p : {BigRat(0), BigRat(1, 4), BigRat(-1, 4)})
      CHECK(expected_ism_formula(d, p) == oracle::exact_expected_ism(d, p));
}

TEST_CASE("Monte Carlo estimate converges to the formula") {
  auto run = [](const Digraph& d, const BigRat& p, std::uint64_t samples) {
    McEstimate estimate = mc_expected_ism(d, p, samples, kDefaultSeed);
    double exact = to_double(expected_ism_formula(d, p));
    double slack = estimate.std_error > 0 ? 3 * estimate.std_error : 1e-12;
    CHECK(std::abs(estimate.mean - exact) <= slack);
  };
  run(fixture::single_arc(), BigRat(0), 10000);
  run(star_orientation(2, 2), BigRat(0), 10000);
  run(star_orientation(3, 3), BigRat(1, 4), 10000);
}

TEST_CASE("Monte Carlo estimates are reproducible") {
  auto a = mc_expected_ism(star_orientation(2, 1), BigRat(1, 4), 500, 99);
  auto b = mc_expected_ism(star_orientation(2, 1), BigRat(1, 4), 500, 99);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("pattern cap") {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < 10; ++i) arcs.emplace_back(i, i + 1);
  Digraph big = Digraph::from_arcs(10, arcs);
  CHECK_THROWS_WITH_AS(ism(big, transitive_tournament(10).digraph()),
                       doctest::Contains("OrderCapExceeded"), Error);
  CHECK_NOTHROW(ism(big, transitive_tournament(10).digraph(), 10));
}
