#include "pcmlab/errors.hpp"

namespace pcmlab {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::non_positive_entry:
      return "non_positive_entry";
    case errc::not_reciprocal:
      return "not_reciprocal";
    case errc::order_too_small:
      return "order_too_small";
    case errc::not_square:
      return "not_square";
    case errc::diagonal_entry:
      return "diagonal_entry";
    case errc::order_mismatch:
      return "order_mismatch";
    case errc::length_mismatch:
      return "length_mismatch";
    case errc::invalid_parameter:
      return "invalid_parameter";
    case errc::no_convergence:
      return "no_convergence";
    case errc::input_consistent:
      return "input_consistent";
  }
  return "unknown";
}

}  // namespace pcmlab
