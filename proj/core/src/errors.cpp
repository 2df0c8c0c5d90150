#include "convinv/errors.hpp"

namespace convinv {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::loop_arc: return "LoopArc";
    case Errc::digon_arc: return "DigonArc";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::order_cap_exceeded: return "OrderCapExceeded";
    case Errc::arc_absent: return "ArcAbsent";
    case Errc::bias_out_of_range: return "BiasOutOfRange";
    case Errc::edge_cap_exceeded: return "EdgeCapExceeded";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::inconsistent_degrees: return "InconsistentDegrees";
    case Errc::not_a_tree: return "NotATree";
    case Errc::acyclic: return "Acyclic";
    case Errc::not_transitive_pair: return "NotTransitivePair";
    case Errc::already_adjacent: return "AlreadyAdjacent";
    case Errc::degree_too_small: return "DegreeTooSmall";
    case Errc::not_a_double_star: return "NotADoubleStar";
    case Errc::max_degree_too_small: return "MaxDegreeTooSmall";
    case Errc::disconnected: return "Disconnected";
    case Errc::degree_zero: return "DegreeZero";
    case Errc::not_regular: return "NotRegular";
    case Errc::bad_header: return "BadHeader";
    case Errc::bad_length: return "BadLength";
    case Errc::non_printable_byte: return "NonPrintableByte";
    case Errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace convinv
