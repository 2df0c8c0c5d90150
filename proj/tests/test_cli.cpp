#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "cli/commands.hpp"
#include "convinv/formats.hpp"
#include "convinv/generate.hpp"
#include "support/fixtures.hpp"

using namespace convinv;
using convinv::cli::Report;
using convinv::cli::run;

namespace {

// Writes content to a temp file and removes it on scope exit.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content, const std::string& tag) {
    path = std::string("convinv_test_") + tag + ".txt";
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

nlohmann::json parsed(const Report& report) { return nlohmann::json::parse(report.to_json()); }

}  // namespace

TEST_CASE("decide command reports the invariant double star") {
  TempFile in(emit_digraph6(fixture::mirrored_in_star()) + "\n", "fig");
  Report report = run("decide", {"--in", in.path});
  auto j = parsed(report);
  CHECK(j["format"] == 1);
  CHECK(j["command"] == "decide");
  CHECK(j["result"]["verdicts"][0]["status"] == "Invariant");
  CHECK(j["result"]["verdicts"][0]["classes_examined"] == 56);
  CHECK(report.exit_code == 0);
  CHECK(j["inputs"][0]["order"] == 6);
}

TEST_CASE("decide command accepts edge-list input and stacked digraph6 lines") {
  TempFile arcs("n 4\n0 1\n1 2\n2 3\n", "arclist");
  Report r1 = run("decide", {"--in", arcs.path, "--input-format", "edgelist"});
  CHECK(parsed(r1)["result"]["verdicts"][0]["status"] == "Invariant");

  TempFile multi(emit_digraph6(fixture::directed_path(3)) + "\n" +
                     emit_digraph6(star_orientation(3, 3)) + "\n",
                 "multi");
  Report r2 = run("decide", {"--in", multi.path});
  auto j = parsed(r2);
  CHECK(j["result"]["verdicts"].size() == 2);
  CHECK(j["result"]["verdicts"][0]["status"] == "Invariant");
  CHECK(j["result"]["verdicts"][1]["status"] == "NotInvariant");
  CHECK(j["result"]["verdicts"][1]["fast_fail_odd_term"] == 3);
}

TEST_CASE("count command reproduces the flipped-transitive counts") {
  TempFile d(emit_digraph6(double_star_orientation(2, 0, 2, 2)) + "\n", "case1d");
  TempFile t(emit_digraph6(flip_arc(transitive_tournament(6), 0, 2).digraph()) + "\n", "case1t");
  Report report = run("count", {"--d", d.path, "--t", t.path});
  auto j = parsed(report);
  CHECK(j["result"]["f_d"] == 3);
  CHECK(j["result"]["f_conv"] == 6);
}

TEST_CASE("gen-tournaments emits one line per class in text mode") {
  Report report = run("gen-tournaments", {"5"});
  CHECK(report.config.output_format == "text");
  CHECK(report.text_lines.size() == 12);
  for (const auto& line : report.text_lines) CHECK(parse_digraph6(line).order() == 5);
  CHECK(parsed(report)["result"]["count"] == 12);
}

TEST_CASE("construct families") {
  Report star = run("construct", {"star", "3", "3"});
  CHECK(parse_digraph6(star.text_lines.at(0)).out_degree(0) == 3);

  Report named = run("construct", {"invariant-double-star"});
  Report alias = run("construct", {"fig2"});
  CHECK(named.text_lines == alias.text_lines);
  CHECK(parse_digraph6(named.text_lines.at(0)) == invariant_double_star());

  Report transitive = run("construct", {"transitive", "4", "--format", "json"});
  CHECK(parsed(transitive)["result"]["digraph_order"] == 4);

  TempFile base(emit_digraph6(star_orientation(2, 0)) + "\n", "mirrorbase");
  Report mirrored = run("construct", {"bridge-mirror", "--in", base.path, "--at", "0"});
  CHECK(parse_digraph6(mirrored.text_lines.at(0)).order() == 6);

  TempFile k4("n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", "k4");
  Report witness = run("construct", {"witness", "--graph", k4.path, "--format", "json"});
  auto j = parsed(witness);
  CHECK(j["result"]["branch"] == "cycle");
  CHECK(j["result"]["f_d"].get<int>() >= 1);
  CHECK(j["result"]["f_conv"] == 0);
}

TEST_CASE("classify cross-checks and reports consistency") {
  TempFile star(emit_digraph6(star_orientation(4, 2)) + "\n", "star42");
  Report report = run("classify", {"--in", star.path});
  auto j = parsed(report);
  CHECK(j["result"]["classifications"][0]["family"] == "star");
  CHECK(j["result"]["classifications"][0]["predicted"] == "Invariant");
  CHECK(j["result"]["classifications"][0]["decided"] == "Invariant");
  CHECK(j["result"]["consistent"] == true);
  CHECK(report.exit_code == 0);

  TempFile ds(emit_digraph6(fixture::mirrored_in_star()) + "\n", "dstar");
  Report ds_report = run("classify", {"--in", ds.path});
  CHECK(parsed(ds_report)["result"]["classifications"][0]["family"] == "double-star");
  CHECK(ds_report.exit_code == 0);
}

TEST_CASE("explore probes a tree") {
  TempFile tree("n 4\n0 1\n0 2\n0 3\n", "star3");
  Report report = run("explore", {"--graph", tree.path});
  auto j = parsed(report);
  CHECK(j["result"]["consistent"] == true);
  CHECK(j["result"]["rows"].size() == 2);
}

TEST_CASE("mc-check passes on the wedge at zero bias") {
  TempFile in(emit_digraph6(star_orientation(2, 2)) + "\n", "wedge");
  Report report = run("mc-check", {"--in", in.path, "--samples", "4000", "--bias", "0"});
  auto j = parsed(report);
  CHECK(j["result"]["exact"] == "3/2");
  CHECK(j["result"]["pass"] == true);
  CHECK(report.exit_code == 0);

  Report biased = run("mc-check", {"--in", in.path, "--samples", "4000", "--bias", "-0.3"});
  CHECK(parsed(biased)["result"]["pass"] == true);
}

TEST_CASE("re-running a command on the echoed input reproduces the verdict") {
  TempFile in("n 4\n0 1\n0 2\n0 3\n", "echo1");
  Report first = run("decide", {"--in", in.path, "--input-format", "edgelist"});
  auto j1 = parsed(first);
  TempFile echoed(j1["inputs"][0]["encoding"].get<std::string>(), "echo2");
  Report second = run("decide", {"--in", echoed.path, "--input-format", "edgelist"});
  CHECK(parsed(second)["result"] == j1["result"]);
}

TEST_CASE("the worker count does not change the verdict fields") {
  TempFile in(emit_digraph6(star_orientation(4, 1)) + "\n", "workers");
  Report one = run("decide", {"--in", in.path, "--workers", "1"});
  Report four = run("decide", {"--in", in.path, "--workers", "4"});
  CHECK(parsed(one)["result"] == parsed(four)["result"]);
}

TEST_CASE("gen-tournaments output is frozen for order 3") {
  Report report = run("gen-tournaments", {"3"});
  REQUIRE(report.text_lines.size() == 2);
  // Two classes: one carries a 3-cycle, the other is transitive.
  Digraph a = parse_digraph6(report.text_lines[0]);
  Digraph b = parse_digraph6(report.text_lines[1]);
  auto is_transitive = [](const Digraph& t) {
    return t.out_degree(0) != t.out_degree(1) || t.out_degree(1) != t.out_degree(2);
  };
  CHECK(is_transitive(a) != is_transitive(b));
}

TEST_CASE("reports are byte-identical apart from timing") {
  TempFile in(emit_digraph6(star_orientation(3, 1)) + "\n", "det");
  auto strip_timing = [](Report r) {
    r.timing_ms = 0;
    return r.to_json();
  };
  CHECK(strip_timing(run("decide", {"--in", in.path})) ==
        strip_timing(run("decide", {"--in", in.path})));
  CHECK(strip_timing(run("poly", {"--in", in.path})) ==
        strip_timing(run("poly", {"--in", in.path})));
}

TEST_CASE("text rendering carries the verdict") {
  TempFile in(emit_digraph6(fixture::directed_path(4)) + "\n", "textout");
  Report report = run("decide", {"--in", in.path, "--format", "text"});
  CHECK(report.config.output_format == "text");
  CHECK(report.render("text").find("Invariant") != std::string::npos);
}

TEST_CASE("csv output carries one row per digraph") {
  TempFile multi(emit_digraph6(fixture::directed_path(3)) + "\n" +
                     emit_digraph6(star_orientation(3, 3)) + "\n",
                 "csvin");
  Report report = run("decide", {"--in", multi.path, "--format", "csv"});
  const std::string csv = report.render("csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 rows
  CHECK(csv.find("NotInvariant") != std::string::npos);
}

TEST_CASE("poly command reports predicates") {
  TempFile in(emit_digraph6(fixture::mirrored_in_star()) + "\n", "poly");
  Report report = run("poly", {"--in", in.path});
  auto j = parsed(report);
  CHECK(j["result"]["polynomials"][0]["polynomial"] == "6 + 2x^2");
  CHECK(j["result"]["polynomials"][0]["odd_coefficients_vanish"] == true);
  CHECK(j["result"]["polynomials"][0]["source_sink_balance"] == true);
  CHECK(j["result"]["polynomials"][0]["top_odd"]["odd_max_case"] == true);
}

TEST_CASE("usage errors surface as UsageError") {
  CHECK_THROWS_WITH_AS(run("decide", {}), doctest::Contains("UsageError"), Error);
  CHECK_THROWS_WITH_AS(run("unknown-command", {}), doctest::Contains("UsageError"), Error);
  CHECK_THROWS_WITH_AS(run("construct", {"nonsense"}), doctest::Contains("UsageError"), Error);
  CHECK_THROWS_WITH_AS(run("decide", {"--in", "no_such_file.d6"}),
                       doctest::Contains("UsageError"), Error);
}
