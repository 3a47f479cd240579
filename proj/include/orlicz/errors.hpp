#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orlicz {

/// Raised when an input cannot be turned into the requested object. `index`
/// points at the offending row, knot, or function when one is known.
class ConstructionError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ConstructionError(const std::string& what, std::size_t index = npos)
      : std::runtime_error(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Raised when an exact enumeration is requested beyond its size limit.
class ExactModeLimit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace orlicz
