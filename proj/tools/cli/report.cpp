#include "cli/report.hpp"

#include "convinv/errors.hpp"

namespace convinv::cli {

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = kFormatVersion;
  j["command"] = command;
  j["config"] = {{"cap", config.order_cap},
                 {"workers", config.workers},
                 {"seed", config.seed},
                 {"output_format", config.output_format},
                 {"input_format", config.input_format}};
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& in : inputs)
    j["inputs"].push_back({{"name", in.name},
                           {"encoding", in.encoding},
                           {"canonical", in.canonical},
                           {"order", in.order},
                           {"arcs", in.arcs}});
  j["result"] = result;
  j["anchors"] = anchors;
  j["exit_code"] = exit_code;
  j["timing_ms"] = timing_ms;
  return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += row[i];
    }
    out += "\n";
  };
  append_row(csv_header);
  for (const auto& row : csv_rows) append_row(row);
  return out;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& line : text_lines) out += line + "\n";
  return out;
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return to_json();
  if (format == "csv") return to_csv();
  if (format == "text") return to_text();
  throw Error(Errc::usage_error, "unknown output format '" + format + "'");
}

}  // namespace convinv::cli
