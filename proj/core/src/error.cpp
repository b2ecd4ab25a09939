#include "schroder/error.hpp"

namespace schroder {

const char* name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidCharacter: return "InvalidCharacter";
    case Errc::NegativeHeight: return "NegativeHeight";
    case Errc::NonzeroEnd: return "NonzeroEnd";
    case Errc::RankBoundExceeded: return "RankBoundExceeded";
    case Errc::NotComparable: return "NotComparable";
    case Errc::PatternNotDyck: return "PatternNotDyck";
    case Errc::ArgOutOfRange: return "ArgOutOfRange";
    case Errc::InternalError: return "InternalError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(name(code)) + ": " + message),
      code_(code) {}

}  // namespace schroder
