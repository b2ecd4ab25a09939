#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "schroder/error.hpp"
#include "schroder/step.hpp"

namespace schroder {

/// A Schröder word: a step sequence over {U, D, H} whose prefix heights
/// never drop below zero and whose total height is zero. The rank of a word
/// in the pattern poset is its semilength, #U + #H.
///
/// The word is stored as its serialized letters. This keeps copies cheap
/// (small words live in the string's inline buffer), gives O(1) step access,
/// and makes operator< the lexicographic order used by the generators,
/// since 'D' < 'H' < 'U' as bytes.
class SchroderWord {
 public:
  /// The empty word, minimum of the poset.
  SchroderWord() = default;

  /// Parses a strict uppercase U/D/H string; no whitespace, no
  /// normalization. Throws Error with Errc::InvalidCharacter,
  /// Errc::NegativeHeight or Errc::NonzeroEnd.
  static SchroderWord parse(std::string_view text);

  /// Builds a word from a step sequence, validating like parse().
  static SchroderWord from_steps(const std::vector<Step>& steps);

  /// Adopts letters the caller guarantees to form a valid word (used by the
  /// generators and the insertion/deletion oracles). Checked in debug only.
  static SchroderWord trusted(std::string letters);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t word_length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Step step_at(std::size_t i) const { return *step_from_letter(letters_[i]); }

  /// #U + #H; the poset rank.
  int semilength() const noexcept;
  /// Final abscissa; always twice the semilength.
  int length() const noexcept { return 2 * semilength(); }
  int up_count() const noexcept;
  int down_count() const noexcept;
  int horizontal_count() const noexcept;

  friend auto operator<=>(const SchroderWord&, const SchroderWord&) = default;

 private:
  std::string letters_;
};

/// True iff text is the serialization of some Schröder word.
bool is_valid_word(std::string_view text) noexcept;

SchroderWord parse(std::string_view text);
std::string serialize(const SchroderWord& w);

}  // namespace schroder
