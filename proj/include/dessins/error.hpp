#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dessins {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is the 0-based offset into the parsed string.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A mathematical precondition does not hold (degree mismatch, non-transitive pair, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A computation would exceed its configured size limit.
class CapExceeded : public Error {
public:
  CapExceeded(const std::string &what, std::string observed)
      : Error(what), observed_(std::move(observed)) {}

  /// The size that was reached or required (an exact group order, a coset high-water mark, ...).
  const std::string &observed() const noexcept { return observed_; }

private:
  std::string observed_;
};

} // namespace dessins
