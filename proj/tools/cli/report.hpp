// Machine-readable run reports: a versioned JSON schema, a CSV row form (one
// row per digraph/verdict), and a human text rendering. Identical inputs and
// config produce byte-identical JSON apart from the timing field.

#ifndef CONVINV_CLI_REPORT_HPP
#define CONVINV_CLI_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "convinv/rng.hpp"

namespace convinv::cli {

struct RunConfig {
  int order_cap = 8;
  int workers = 0;  // 0 = machine parallelism
  std::uint64_t seed = kDefaultSeed;
  std::string output_format;  // json | csv | text; empty = per-command default
  std::string input_format = "digraph6";  // digraph6 | edgelist
};

struct InputEcho {
  std::string name;
  std::string encoding;
  std::string canonical;
  int order = 0;
  int arcs = 0;
};

struct Report {
  static constexpr int kFormatVersion = 1;

  std::string command;
  RunConfig config;
  std::vector<InputEcho> inputs;
  nlohmann::ordered_json result;
  std::vector<std::string> anchors;
  double timing_ms = 0.0;
  int exit_code = 0;

  // Plain payload lines for text mode (digraph6 output, per-verdict lines).
  std::vector<std::string> text_lines;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
  std::string render(const std::string& format) const;
};

}  // namespace convinv::cli

#endif
