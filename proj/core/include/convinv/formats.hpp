// Interchange formats: digraph6 lines ('&', the size byte, then the
// adjacency matrix packed row-major into 6-bit printable groups) and a
// hand-editable edge-list text format ("n <N>" header, one "u v" pair per
// line, '#' comments).

#ifndef CONVINV_FORMATS_HPP
#define CONVINV_FORMATS_HPP

#include <string>

#include "convinv/digraph.hpp"
#include "convinv/graph.hpp"

namespace convinv {

Digraph parse_digraph6(const std::string& line);
std::string emit_digraph6(const Digraph& d);

Digraph parse_arc_list(const std::string& text);
std::string emit_arc_list(const Digraph& d);

// Same syntax, pairs read as undirected edges.
Graph parse_edge_list(const std::string& text);

}  // namespace convinv

#endif
