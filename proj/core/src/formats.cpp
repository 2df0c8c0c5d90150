#include "convinv/formats.hpp"

#include <sstream>
#include <vector>

namespace convinv {

namespace {

constexpr int kRadixOffset = 63;

std::string strip_eol(const std::string& line) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::vector<Arc> decode_matrix_bits(const std::string& data, int n) {
  std::vector<Arc> arcs;
  const int total_bits = n * n;
  for (std::size_t k = 0; k < data.size(); ++k) {
    const unsigned char byte = static_cast<unsigned char>(data[k]);
    if (byte < kRadixOffset || byte > 126)
      throw Error(Errc::non_printable_byte, "byte value " + std::to_string(byte));
    const unsigned group = byte - kRadixOffset;
    for (int b = 0; b < 6; ++b) {
      if (!(group & (0x20u >> b))) continue;
      const int pos = static_cast<int>(k) * 6 + b;
      if (pos >= total_bits)
        throw Error(Errc::bad_length, "nonzero padding bit at position " + std::to_string(pos));
      arcs.emplace_back(pos / n, pos % n);
    }
  }
  return arcs;
}

}  // namespace

Digraph parse_digraph6(const std::string& raw) {
  const std::string line = strip_eol(raw);
  if (line.empty() || line[0] != '&')
    throw Error(Errc::bad_header, "digraph6 line must start with '&'");
  if (line.size() < 2) throw Error(Errc::bad_length, "missing size byte");
  const unsigned char size_byte = static_cast<unsigned char>(line[1]);
  if (size_byte < kRadixOffset || size_byte > 126)
    throw Error(Errc::non_printable_byte, "size byte value " + std::to_string(size_byte));
  if (size_byte == 126)
    throw Error(Errc::order_cap_exceeded, "multi-byte size encodings exceed the supported order");
  const int n = size_byte - kRadixOffset;
  if (n > kMaxOrder)
    throw Error(Errc::order_cap_exceeded, "order " + std::to_string(n) + " > " + std::to_string(kMaxOrder));
  const std::size_t expected = (static_cast<std::size_t>(n) * n + 5) / 6;
  const std::string data = line.substr(2);
  if (data.size() != expected)
    throw Error(Errc::bad_length, "expected " + std::to_string(expected) + " data bytes, got " +
                                      std::to_string(data.size()));
  return Digraph::from_arcs(n, decode_matrix_bits(data, n));
}

std::string emit_digraph6(const Digraph& d) {
  const int n = d.order();
  if (n > 62) throw Error(Errc::order_cap_exceeded, "single-byte size encoding needs order <= 62");
  std::string out = "&";
  out.push_back(static_cast<char>(kRadixOffset + n));
  const int total_bits = n * n;
  const int groups = (total_bits + 5) / 6;
  std::vector<unsigned> packed(static_cast<std::size_t>(groups), 0);
  for (auto [u, v] : d.arcs()) {
    const int pos = u * n + v;
    packed[static_cast<std::size_t>(pos / 6)] |= 0x20u >> (pos % 6);
  }
  for (unsigned group : packed) out.push_back(static_cast<char>(kRadixOffset + group));
  return out;
}

namespace {

std::vector<std::pair<int, int>> parse_pair_lines(const std::string& text, int& order) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  order = -1;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!have_header) {
      if (first != "n") throw Error(Errc::bad_header, "expected 'n <order>' header");
      if (!(fields >> order) || order < 0) throw Error(Errc::bad_header, "bad order in header");
      have_header = true;
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw Error(Errc::bad_length, "bad vertex '" + first + "'");
    }
    if (!(fields >> v)) throw Error(Errc::bad_length, "line needs two vertices: '" + line + "'");
    pairs.emplace_back(u, v);
  }
  if (!have_header) throw Error(Errc::bad_header, "missing 'n <order>' header");
  return pairs;
}

}  // namespace

Digraph parse_arc_list(const std::string& text) {
  int order = 0;
  auto pairs = parse_pair_lines(text, order);
  return Digraph::from_arcs(order, pairs);
}

std::string emit_arc_list(const Digraph& d) {
  std::string out = "n " + std::to_string(d.order()) + "\n";
  for (auto [u, v] : d.arcs()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_edge_list(const std::string& text) {
  int order = 0;
  auto pairs = parse_pair_lines(text, order);
  return Graph::from_edges(order, pairs);
}

}  // namespace convinv
