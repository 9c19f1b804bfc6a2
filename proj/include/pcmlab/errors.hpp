#pragma once

#include <stdexcept>
#include <string>

namespace pcmlab {

/// Failure categories for domain-level validation and numerics.
enum class errc {
  non_positive_entry,
  not_reciprocal,
  order_too_small,
  not_square,
  diagonal_entry,
  order_mismatch,
  length_mismatch,
  invalid_parameter,
  no_convergence,
  input_consistent,
};

const char* errc_name(errc code) noexcept;

/// Thrown on violated preconditions and invariants of the matrix domain.
/// Carries a machine-checkable code next to the human-readable message.
class PcmError : public std::runtime_error {
 public:
  PcmError(errc code, const std::string& what_arg)
      : std::runtime_error(what_arg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Thrown on file access and parse failures (distinct from domain errors so
/// the CLI can map the two classes to different exit codes).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcmlab
