#include "schroder/gen.hpp"

#include <cstdlib>

#include "schroder/error.hpp"

namespace schroder::gen {

GenSpec GenSpec::all(int n) {
  if (n < 0) throw Error(Errc::ArgOutOfRange, "semilength must be >= 0");
  return GenSpec{n, Kind::All, 0};
}

GenSpec GenSpec::dyck(int n) {
  if (n < 0) throw Error(Errc::ArgOutOfRange, "semilength must be >= 0");
  return GenSpec{n, Kind::DyckOnly, 0};
}

GenSpec GenSpec::exact_horizontals(int n, int q) {
  if (n < 0 || q < 0 || q > n) {
    throw Error(Errc::ArgOutOfRange,
                "need 0 <= q <= n, got q=" + std::to_string(q) +
                    " n=" + std::to_string(n));
  }
  return GenSpec{n, Kind::ExactHorizontals, q};
}

WordStream::WordStream(GenSpec spec) : spec_(spec) {}

// A letter may be appended when the extended prefix still completes to a
// word of the target level set. D keeps the used semilength, U and H spend
// one unit; in exact-horizontal mode U must also leave room for the
// horizontals still owed. Under these rules no prefix is ever a dead end,
// and a prefix with no feasible extension is exactly a finished word.
bool WordStream::feasible(char c) const noexcept {
  switch (c) {
    case 'D':
      return height_ > 0;
    case 'H':
      if (spec_.kind == GenSpec::Kind::DyckOnly) return false;
      if (spec_.kind == GenSpec::Kind::ExactHorizontals &&
          horiz_ >= spec_.horizontals)
        return false;
      return semi_ < spec_.semilength;
    default:  // 'U'
      if (semi_ >= spec_.semilength) return false;
      if (spec_.kind == GenSpec::Kind::ExactHorizontals &&
          spec_.semilength - semi_ - 1 < spec_.horizontals - horiz_)
        return false;
      return true;
  }
}

void WordStream::push(char c) {
  cur_.push_back(c);
  height_ += rise(c);
  semi_ += semilength_weight(c);
  if (c == 'H') ++horiz_;
}

void WordStream::pop() {
  char c = cur_.back();
  cur_.pop_back();
  height_ -= rise(c);
  semi_ -= semilength_weight(c);
  if (c == 'H') --horiz_;
}

void WordStream::descend() {
  for (;;) {
    if (feasible('D')) {
      push('D');
    } else if (feasible('H')) {
      push('H');
    } else if (feasible('U')) {
      push('U');
    } else {
      return;  // cur_ is a finished word
    }
  }
}

std::optional<SchroderWord> WordStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    descend();
    return SchroderWord::trusted(cur_);
  }
  while (!cur_.empty()) {
    char c = cur_.back();
    pop();
    for (char succ : {'H', 'U'}) {  // letters after c in 'D' < 'H' < 'U'
      if (succ > c && feasible(succ)) {
        push(succ);
        descend();
        return SchroderWord::trusted(cur_);
      }
    }
  }
  done_ = true;
  return std::nullopt;
}

WordStream schroder_words(int n) { return WordStream(GenSpec::all(n)); }

WordStream dyck_words(int n) { return WordStream(GenSpec::dyck(n)); }

PrefixStream::PrefixStream(int length, int end_height)
    : target_len_(length), target_height_(end_height) {
  if (length < 0 || end_height < 0) {
    throw Error(Errc::ArgOutOfRange, "prefix length and height must be >= 0");
  }
  // Unreachable targets (too high, or wrong parity) make an empty stream.
  if (end_height > length || (length - end_height) % 2 != 0) done_ = true;
}

bool PrefixStream::feasible(char c) const noexcept {
  int remaining = target_len_ - static_cast<int>(cur_.size());
  if (remaining == 0) return false;
  int nh = height_ + rise(c);
  if (nh < 0) return false;
  int gap = target_height_ - nh;
  return std::abs(gap) <= remaining - 1 && (gap % 2 + 2) % 2 == (remaining - 1) % 2;
}

void PrefixStream::descend() {
  for (;;) {
    if (feasible('D')) {
      cur_.push_back('D');
      --height_;
    } else if (feasible('U')) {
      cur_.push_back('U');
      ++height_;
    } else {
      return;
    }
  }
}

std::optional<std::string> PrefixStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    descend();
    return cur_;
  }
  while (!cur_.empty()) {
    char c = cur_.back();
    cur_.pop_back();
    height_ -= rise(c);
    if (c == 'D' && feasible('U')) {
      cur_.push_back('U');
      ++height_;
      descend();
      return cur_;
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<SchroderWord> collect(WordStream stream) {
  std::vector<SchroderWord> out;
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

std::uint64_t count(WordStream stream) {
  std::uint64_t n = 0;
  while (stream.next()) ++n;
  return n;
}

}  // namespace schroder::gen
