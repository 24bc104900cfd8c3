#pragma once

#include <stdexcept>
#include <string>

namespace arq {

enum class ErrorKind {
  invalid_type,
  index_out_of_range,
  malformed_word,
  not_reduced,
  not_longest,
  not_a_root,
  root_not_in_quiver,
  not_sectional,
  not_adapted,
  not_sink_or_source,
  invalid_automorphism,
  weight_mismatch,
  inconsistent_labels,
  ambiguous_labels,
  size_cap,
  budget,
  parse,
  io,
};

const char* to_string(ErrorKind kind);

// Domain error. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arq
