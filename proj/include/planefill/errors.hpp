#pragma once

#include <stdexcept>
#include <string>

namespace planefill {

/// A request would build a field or extension beyond a configured limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The singular system of a curve is not zero-dimensional (repeated component
/// or otherwise degenerate input).
class DegenerateLocus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace planefill
