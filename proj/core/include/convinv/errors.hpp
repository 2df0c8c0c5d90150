// Error codes and the exception type shared by all convinv modules.

#ifndef CONVINV_ERRORS_HPP
#define CONVINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace convinv {

enum class Errc {
  loop_arc,
  digon_arc,
  out_of_range,
  order_cap_exceeded,
  arc_absent,
  bias_out_of_range,
  edge_cap_exceeded,
  index_out_of_range,
  inconsistent_degrees,
  not_a_tree,
  acyclic,
  not_transitive_pair,
  already_adjacent,
  degree_too_small,
  not_a_double_star,
  max_degree_too_small,
  disconnected,
  degree_zero,
  not_regular,
  bad_header,
  bad_length,
  non_printable_byte,
  usage_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace convinv

#endif
