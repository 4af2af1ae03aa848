#pragma once

#include <stdexcept>
#include <string>

namespace ctl {

// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition of an operation does not hold for the given input.
struct precondition_error : error {
  explicit precondition_error(const std::string& what) : error(what) {}
};

// Input exceeds the configured exhaustive-computation bound.
struct resource_error : error {
  explicit resource_error(const std::string& what) : error(what) {}
};

// Malformed textual / JSON input.
struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

// Internal invariant failed; indicates a bug, not bad input.
struct internal_error : error {
  explicit internal_error(const std::string& what) : error(what) {}
};

}  // namespace ctl
