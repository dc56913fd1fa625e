#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dehnfill {

enum class ErrorKind {
  invalid_slope,
  not_neighbors,
  not_a_vertex,
  already_in_fan,
  odd_slope,
  odd_seed,
  infeasible,
  ambiguous,
  no_bounded_surfaces,
  capping_degenerates,
  resource,
  path_not_alternating,
  path_does_not_clear,
  invalid_path,
  out_of_range,
  parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dehnfill
