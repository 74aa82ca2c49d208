#ifndef CLOPEN_ERROR_HPP
#define CLOPEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace clopen {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  invalid_input,   // malformed or inconsistent data (axiom violation, bad map)
  parse,           // descriptor / JSON syntax
  precondition,    // operation applied outside its domain
  resource,        // a size bound was exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(ErrorKind::parse,
              what + " (column " + std::to_string(column + 1) + ")"),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace clopen

#endif  // CLOPEN_ERROR_HPP
