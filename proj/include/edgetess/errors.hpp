#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgetess {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
  division_by_zero() : error("division by zero in Q(sqrt2, sqrt3)") {}
};

struct degenerate_edge : error {
  degenerate_edge() : error("degenerate edge: endpoints coincide") {}
};

struct zero_vector : error {
  zero_vector() : error("zero vector has no direction") {}
};

struct invalid_polygon : error {
  using error::error;
};

struct argument_out_of_range : error {
  using error::error;
};

struct missing_parameter : error {
  using error::error;
};

struct index_error : error {
  using error::error;
};

struct file_not_found : error {
  explicit file_not_found(const std::string& path) : error("cannot open '" + path + "'"), path(path) {}
  std::string path;
};

/// Malformed textual input. `line` is 1-based, 0 when not tied to a line.
struct parse_error : error {
  parse_error(std::size_t line, const std::string& what)
      : error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  std::size_t line;
};

}  // namespace edgetess
