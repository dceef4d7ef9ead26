#pragma once

#include <stdexcept>
#include <string>

namespace pcup {

enum class ErrorKind {
  parse,
  ring_mismatch,
  not_a_face_closure,
  bad_intersection,
  redundant_vertex,
  invalid_cell,
  not_convenient,
  sampling_exhausted,
  not_simplicial,
  phi_on_hyperplane,
  no_crossing,
  multiple_crossings,
  bad_kappa,
  not_a_subdivision,
  degenerate_sum,
  dimension_mismatch,
  not_a_cocycle,
};

const char* to_string(ErrorKind kind);

// Base of every error raised by the library. The kind is stable and is what
// the CLI maps to exit codes; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pcup
