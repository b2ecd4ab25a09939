#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schroder/word.hpp"

namespace schroder::gen {

/// Selects one level set of the poset for enumeration.
struct GenSpec {
  enum class Kind { All, DyckOnly, ExactHorizontals };

  int semilength = 0;
  Kind kind = Kind::All;
  int horizontals = 0;  // only read for ExactHorizontals

  static GenSpec all(int n);
  static GenSpec dyck(int n);
  /// Requires 0 <= q <= n, else Errc::ArgOutOfRange.
  static GenSpec exact_horizontals(int n, int q);
};

/// Lazy enumerator over one level set. Words come out exactly once, in
/// lexicographic order of their serialization ('D' < 'H' < 'U'). The walk
/// is a depth-first scan that only ever extends prefixes that still reach
/// a valid word, so work is proportional to output, not to the 3^l
/// universe. Consumers may stop early.
class WordStream {
 public:
  explicit WordStream(GenSpec spec);
  std::optional<SchroderWord> next();

 private:
  bool feasible(char c) const noexcept;
  void push(char c);
  void pop();
  void descend();

  GenSpec spec_;
  std::string cur_;
  int height_ = 0;
  int semi_ = 0;
  int horiz_ = 0;
  bool started_ = false;
  bool done_ = false;
};

WordStream schroder_words(int n);
WordStream dyck_words(int n);

/// All U/D sequences of the given length with every prefix height >= 0,
/// ending at exactly end_height, in lexicographic order ('D' < 'U').
/// Dyck prefixes are not Schröder words (they need not return to the
/// axis), so they are yielded as plain letter strings.
class PrefixStream {
 public:
  PrefixStream(int length, int end_height);
  std::optional<std::string> next();

 private:
  bool feasible(char c) const noexcept;
  void descend();

  int target_len_;
  int target_height_;
  std::string cur_;
  int height_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Drains a stream into a vector; handy in tests and the CLI.
std::vector<SchroderWord> collect(WordStream stream);

/// Drains a stream counting the words. Level sizes up to any enumerable
/// rank fit comfortably in 64 bits.
std::uint64_t count(WordStream stream);

}  // namespace schroder::gen
