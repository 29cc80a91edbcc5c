#pragma once

#include <stdexcept>
#include <string>

namespace stc {

enum class ErrorKind {
  InvalidArgument,  // malformed input, bad parameters
  InvalidColoring,  // coloring fails validation where a valid one is required
  Mismatch,         // a move does not match the current coloring
  NotFound,         // unknown key / id
  Unsupported,      // input outside an operation's domain
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace stc
