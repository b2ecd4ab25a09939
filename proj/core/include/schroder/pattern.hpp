#pragma once

#include "schroder/bigint.hpp"
#include "schroder/word.hpp"

namespace schroder {

/// True iff pat occurs in host as a (not necessarily contiguous) subword.
/// Greedy left-to-right matching; O(|host|).
bool contains(const SchroderWord& host, const SchroderWord& pat);

/// The five parametric pattern families with closed-form avoidance counts.
struct PatternFamily {
  enum class Kind {
    UdK,   // (UD)^k
    UkDk,  // U^k D^k
    H2K,   // H^k
    UH2D,  // U H^{k-1} D
    H2Ud,  // H^{k-1} U D
  };

  Kind kind = Kind::UdK;
  int k = 1;  // k >= 1; the closed formulas for UH2D/H2Ud need k >= 2
};

/// The literal pattern word, e.g. UdK(2) -> UDUD, H2Ud(2) -> HUD.
/// Requires k >= 1, else Errc::ArgOutOfRange.
SchroderWord realize(const PatternFamily& family);

/// Number of words of the given semilength avoiding pat, by exhaustive
/// generation. The level set is streamed, never materialized.
BigCount avoiders_brute(int semilength, const SchroderWord& pat);

}  // namespace schroder
