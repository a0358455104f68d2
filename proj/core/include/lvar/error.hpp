#pragma once

#include <stdexcept>
#include <string>

namespace lvar {

// Coarse classification of failures; the CLI maps each kind to an exit code.
enum class ErrorKind {
  InvalidArgument,
  Infeasible,  // sup of the loss profile reaches 1, the risk would be -inf
  Bracket,     // a search bracket does not straddle the boundary
  DualRange,   // dual variable outside the range of the dual function
  Parse,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace lvar
