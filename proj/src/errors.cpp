#include "modcert/errors.hpp"

namespace modcert {

const char* errc_name(errc code) {
  switch (code) {
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::isolated_vertex: return "IsolatedVertex";
    case errc::disconnected: return "Disconnected";
    case errc::too_small: return "TooSmall";
    case errc::could_not_connect: return "CouldNotConnect";
    case errc::parse_error: return "ParseError";
    case errc::not_a_partition: return "NotAPartition";
    case errc::empty_side: return "EmptySide";
    case errc::no_convergence: return "NoConvergence";
    case errc::mu_out_of_range: return "MuOutOfRange";
    case errc::zero_entry: return "ZeroEntry";
    case errc::degenerate_side: return "DegenerateSide";
    case errc::non_positive_mu: return "NonPositiveMu";
    case errc::not_unit_norm: return "NotUnitNorm";
    case errc::zero_cos: return "ZeroCos";
    case errc::not_zero_sum: return "NotZeroSum";
    case errc::too_large: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace modcert
