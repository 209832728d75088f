#include "alphaspec/error.hpp"

namespace alphaspec {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EdgeArity: return "EdgeArity";
    case Errc::VertexRange: return "VertexRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::BadParams: return "BadParams";
    case Errc::ParseError: return "ParseError";
    case Errc::NotATree: return "NotATree";
    case Errc::InfeasibleSequence: return "InfeasibleSequence";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AlphaRange: return "AlphaRange";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NonPositiveVector: return "NonPositiveVector";
    case Errc::IncompleteLabeling: return "IncompleteLabeling";
    case Errc::NoRoot: return "NoRoot";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotSorted: return "NotSorted";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace alphaspec
