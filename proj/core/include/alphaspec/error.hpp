#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alphaspec {

enum class Errc {
  EdgeArity,
  VertexRange,
  DuplicateEdge,
  BadParams,
  ParseError,
  NotATree,
  InfeasibleSequence,
  TooLarge,
  DimensionMismatch,
  AlphaRange,
  ZeroVector,
  NotConnected,
  NoConvergence,
  NonPositiveVector,
  IncompleteLabeling,
  NoRoot,
  ConstraintViolated,
  LengthMismatch,
  NotSorted,
};

std::string_view to_string(Errc code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace alphaspec
