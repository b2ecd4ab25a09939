#pragma once

#include <stdexcept>
#include <string>

namespace schroder {

/// Failure categories surfaced by the library.
enum class Errc {
  InvalidCharacter,   // input byte outside U/D/H
  NegativeHeight,     // a prefix dips below the x-axis
  NonzeroEnd,         // the path does not return to the axis
  RankBoundExceeded,  // request beyond a configured safety bound
  NotComparable,      // Möbius endpoints are not ordered
  PatternNotDyck,     // Dyck-only operation given a pattern with H steps
  ArgOutOfRange,      // argument outside the documented domain
  InternalError,      // invariant violation; indicates a bug, not bad input
};

const char* name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace schroder
