#ifndef DBIC_ERROR_HPP
#define DBIC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dbic {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Alphabet size, string length or vertex cap out of range.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// 1-based index outside the string it addresses.
class IndexError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  /// 1-based character offset of the offending input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The closed-form ball characterization does not cover the request.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class CodeVertexOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace dbic

#endif  // DBIC_ERROR_HPP
