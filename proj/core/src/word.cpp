#include "schroder/word.hpp"

#include <algorithm>
#include <cassert>

namespace schroder {
namespace {

// Returns true if text serializes a valid word; otherwise sets err.
bool check(std::string_view text, Errc& err) noexcept {
  int height = 0;
  for (char c : text) {
    if (!step_from_letter(c)) {
      err = Errc::InvalidCharacter;
      return false;
    }
    height += rise(c);
    if (height < 0) {
      err = Errc::NegativeHeight;
      return false;
    }
  }
  if (height != 0) {
    err = Errc::NonzeroEnd;
    return false;
  }
  return true;
}

}  // namespace

SchroderWord SchroderWord::parse(std::string_view text) {
  Errc err{};
  if (!check(text, err)) {
    throw Error(err, "cannot parse \"" + std::string(text) + "\"");
  }
  SchroderWord w;
  w.letters_.assign(text);
  return w;
}

SchroderWord SchroderWord::from_steps(const std::vector<Step>& steps) {
  std::string letters;
  letters.reserve(steps.size());
  for (Step s : steps) letters.push_back(to_letter(s));
  return parse(letters);
}

SchroderWord SchroderWord::trusted(std::string letters) {
  assert(is_valid_word(letters));
  SchroderWord w;
  w.letters_ = std::move(letters);
  return w;
}

int SchroderWord::semilength() const noexcept {
  int n = 0;
  for (char c : letters_) n += semilength_weight(c);
  return n;
}

int SchroderWord::up_count() const noexcept {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'U'));
}

int SchroderWord::down_count() const noexcept {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'D'));
}

int SchroderWord::horizontal_count() const noexcept {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'H'));
}

bool is_valid_word(std::string_view text) noexcept {
  Errc err{};
  return check(text, err);
}

SchroderWord parse(std::string_view text) { return SchroderWord::parse(text); }

std::string serialize(const SchroderWord& w) { return w.letters(); }

}  // namespace schroder
