#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace persym {

// Bad user input: unreadable files, malformed formats, invalid argument
// combinations. The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource cap was hit (search nodes, enumeration size,
// output size). The CLI maps this to exit code 3. cap_name identifies
// which cap fired so callers can report it.
struct resource_error : std::runtime_error {
  std::string cap_name;
  resource_error(std::string cap, const std::string& msg)
      : std::runtime_error(msg), cap_name(std::move(cap)) {}
};

// A curve feature could not be extracted (no qualifying plateau etc.).
struct feature_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degenerate numeric situation, e.g. zero variance in a correlation.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violation of an internal mathematical invariant. Always a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace persym
