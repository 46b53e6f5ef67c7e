#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acyclic {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidEmbedding : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidFace : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive routine is asked to run past its size guard.
struct ResourceGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace acyclic
