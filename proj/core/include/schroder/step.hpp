#pragma once

#include <optional>

namespace schroder {

/// The three step letters of a Schröder path:
/// Up = (1,1), Down = (1,-1), Horizontal = (2,0).
/// Each step is one letter of the word, so Horizontal counts once toward
/// word length even though it spans two units of abscissa.
enum class Step : unsigned char { Up, Down, Horizontal };

constexpr char to_letter(Step s) noexcept {
  switch (s) {
    case Step::Up: return 'U';
    case Step::Down: return 'D';
    default: return 'H';
  }
}

constexpr std::optional<Step> step_from_letter(char c) noexcept {
  switch (c) {
    case 'U': return Step::Up;
    case 'D': return Step::Down;
    case 'H': return Step::Horizontal;
    default: return std::nullopt;
  }
}

/// Height contribution of one step.
constexpr int rise(Step s) noexcept {
  return s == Step::Up ? 1 : s == Step::Down ? -1 : 0;
}

constexpr int rise(char letter) noexcept {
  return letter == 'U' ? 1 : letter == 'D' ? -1 : 0;
}

/// Abscissa advance of one step.
constexpr int run(Step s) noexcept { return s == Step::Horizontal ? 2 : 1; }

/// How much one step adds to the semilength (U and H each add one).
constexpr int semilength_weight(char letter) noexcept {
  return letter == 'D' ? 0 : 1;
}

}  // namespace schroder
