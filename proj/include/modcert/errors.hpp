#pragma once

#include <stdexcept>
#include <string>

namespace modcert {

enum class errc {
  self_loop,
  duplicate_edge,
  index_out_of_range,
  isolated_vertex,
  disconnected,
  too_small,
  could_not_connect,
  parse_error,
  not_a_partition,
  empty_side,
  no_convergence,
  mu_out_of_range,
  zero_entry,
  degenerate_side,
  non_positive_mu,
  not_unit_norm,
  zero_cos,
  not_zero_sum,
  too_large,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace modcert
